/*
   Copyright 2026 The specunits Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPECUNITS_ERRORS_HPP
#define SPECUNITS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specunits {

/// Caller broke an API contract: mismatched moduli or conductors, bad
/// residues, malformed input text.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request with no answer in the domain (vectors not
/// homometric, irrational value read as rational, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Inverse transform produced an entry outside Q.
class NonRationalResult : public DomainError {
 public:
  NonRationalResult(std::size_t index, const std::string& what)
      : DomainError(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Input data contradicts a structural property it must have (e.g. the
/// vanishing Fourier coefficients of two homometric vectors differ).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a result the algebra guarantees fails to materialise.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace specunits

#endif  // SPECUNITS_ERRORS_HPP
