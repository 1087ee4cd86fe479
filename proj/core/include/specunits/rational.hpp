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

#ifndef SPECUNITS_RATIONAL_HPP
#define SPECUNITS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace specunits {

// Arithmetic on mpq_class keeps operands canonical (gcd 1, positive
// denominator); only direct num/den construction needs canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms. Throws DivisionByZero when den == 0.
Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q" (optionally with a leading '+'). Surrounding
/// whitespace is ignored. Throws UsageError on malformed text and
/// DivisionByZero on a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

}  // namespace specunits

#endif  // SPECUNITS_RATIONAL_HPP
