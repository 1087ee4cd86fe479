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

#ifndef SPECUNITS_CIRCULANT_HPP
#define SPECUNITS_CIRCULANT_HPP

#include <optional>
#include <span>
#include <vector>

#include "specunits/exact_cyclo.hpp"
#include "specunits/rational.hpp"

namespace specunits {

/// Sorted, duplicate-free residues of Z_n.
using Subset = std::vector<int>;

/// Rational-valued map Z_n -> Q. Indexing wraps modulo n.
class CyclicVector {
 public:
  /// Zero vector of Z_n; n >= 1.
  explicit CyclicVector(int n);
  explicit CyclicVector(std::vector<Rational> entries);

  int n() const { return static_cast<int>(entries_.size()); }
  const Rational& operator[](long k) const { return entries_[wrap(k)]; }
  Rational& operator[](long k) { return entries_[wrap(k)]; }
  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const CyclicVector&, const CyclicVector&) = default;
  friend auto operator<=>(const CyclicVector& a, const CyclicVector& b) {
    return a.entries_ <=> b.entries_;
  }
  friend CyclicVector operator-(const CyclicVector& a);

 private:
  std::size_t wrap(long k) const;
  std::vector<Rational> entries_;
};

/// Conductor shared by every spectrum value on Z_n: n for even n, 2n for odd n.
int spectrum_conductor(int n);

/// Unnormalised Fourier coefficients F(j) = sum_k a_k zeta_n^(jk), all
/// stored over conductor spectrum_conductor(n).
class Spectrum {
 public:
  /// Throws UsageError unless every value uses spectrum_conductor(size).
  explicit Spectrum(std::vector<CycloNum> values);

  int n() const { return static_cast<int>(values_.size()); }
  int conductor() const { return spectrum_conductor(n()); }
  const CycloNum& operator[](long j) const;
  const std::vector<CycloNum>& values() const { return values_; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<CycloNum> values_;
};

CyclicVector delta(int n, int t);
/// b_k = a_(k-t): the set translated by t.
CyclicVector translate(const CyclicVector& a, int t);

/// (a*b)_j = sum_k a_k b_(j-k). Throws UsageError on modulus mismatch.
CyclicVector convolve(const CyclicVector& a, const CyclicVector& b);
/// (a*)_k = a_(-k).
CyclicVector star(const CyclicVector& a);
/// a convolved with star(a); the difference histogram for a 0/1 vector.
CyclicVector interval_content(const CyclicVector& a);
bool is_homometric(const CyclicVector& a, const CyclicVector& b);

Spectrum dft(const CyclicVector& a);
/// a_k = (1/n) sum_j S_j zeta_n^(-jk). Throws NonRationalResult carrying the
/// first index whose value is irrational.
CyclicVector idft(const Spectrum& s);
/// idft() without the exception: empty when some entry is irrational.
std::optional<CyclicVector> idft_if_rational(const Spectrum& s);

/// F_a(j) * conj(F_a(j)) for each j.
std::vector<CycloNum> mag_sq_spectrum(const CyclicVector& a);

/// Characteristic vector. Throws UsageError on residues outside [0, n).
CyclicVector from_set(int n, std::span<const int> elements);
/// Support of a 0/1 vector. Throws DomainError on any other entry.
Subset to_set(const CyclicVector& a);

}  // namespace specunits

#endif  // SPECUNITS_CIRCULANT_HPP
