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

#ifndef SPECUNITS_EXACT_CYCLO_HPP
#define SPECUNITS_EXACT_CYCLO_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specunits/rational.hpp"

namespace specunits {

/// Dense univariate polynomial over Q, lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  friend bool operator==(const RatPoly&, const RatPoly&) = default;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division. Throws DivisionByZero when
/// the divisor is zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);

std::string to_string(const RatPoly& p);

int euler_phi(int m);
std::vector<int> divisors(int m);

/// The m-th cyclotomic polynomial, obtained by exact division of x^m - 1 by
/// the product of Phi_d over the proper divisors d of m.
RatPoly cyclotomic_polynomial(int m);

/// Largest order of a root of unity in Q(zeta_m): m for even m, 2m for odd m.
int root_of_unity_bound(int m);

/// zeta_conductor^exponent, with zeta_m = exp(2 i pi / m).
struct RootExp {
  int conductor = 1;
  int exponent = 0;

  RootExp() = default;
  RootExp(int conductor, long exponent);

  int order() const;
  friend bool operator==(const RootExp&, const RootExp&) = default;
  friend auto operator<=>(const RootExp&, const RootExp&) = default;
};

namespace detail {
struct CycloContext;
}

/// Element of Q(zeta_m), stored as the remainder of a representative
/// polynomial in zeta_m modulo Phi_m (power basis 1, zeta, ..., zeta^(phi-1)).
///
/// Values are immutable once built; the per-conductor reduction tables they
/// point to are shared and never modified. Binary operations require equal
/// conductors and throw UsageError otherwise (see embed()).
class CycloNum {
 public:
  /// Zero of Q(zeta_1) = Q.
  CycloNum();
  /// Zero of Q(zeta_m).
  explicit CycloNum(int conductor);
  /// The rational q viewed in Q(zeta_m).
  CycloNum(int conductor, const Rational& q);

  /// sum_t c[t] zeta_m^t for any length of c; exponents wrap modulo m.
  static CycloNum from_power_sum(int conductor, std::span<const Rational> c);

  int conductor() const;
  /// Coordinates in the power basis; length phi(conductor).
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const Rational& q);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator*(CycloNum a, const Rational& q) { return a *= q; }
  friend CycloNum operator-(const CycloNum& a);

  /// Throws UsageError when the conductors differ.
  friend bool operator==(const CycloNum& a, const CycloNum& b);

 private:
  CycloNum(std::shared_ptr<const detail::CycloContext> ctx, std::vector<Rational> coeffs);
  void require_same_field(const CycloNum& o) const;

  std::shared_ptr<const detail::CycloContext> ctx_;
  std::vector<Rational> coeffs_;

  friend CycloNum galois(const CycloNum&, long);
  friend CycloNum embed(const CycloNum&, int);
  friend CycloNum inv(const CycloNum&);
};

/// zeta_m^(e mod m).
CycloNum root(int m, long e);
CycloNum root(const RootExp& r);

CycloNum conj(const CycloNum& x);
/// Throws DivisionByZero on zero.
CycloNum inv(const CycloNum& x);
CycloNum pow(const CycloNum& x, long e);

/// Same element written over conductor M; requires conductor(x) | M.
CycloNum embed(const CycloNum& x, int M);

/// The automorphism zeta_m -> zeta_m^k. Requires gcd(k, m) = 1.
CycloNum galois(const CycloNum& x, long k);

bool is_rational(const CycloNum& x);
/// Throws DomainError unless is_rational(x).
Rational as_rational(const CycloNum& x);

/// Exponent of x as a root of unity, written over root_of_unity_bound(m);
/// empty when x is not a root of unity. order() of the result is the exact
/// multiplicative order of x.
std::optional<RootExp> is_root_of_unity(const CycloNum& x);

/// Human-readable form, e.g. "1/2 + 3*z12^2".
std::string to_string(const CycloNum& x);

}  // namespace specunits

#endif  // SPECUNITS_EXACT_CYCLO_HPP
