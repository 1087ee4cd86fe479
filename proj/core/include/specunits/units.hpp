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

#ifndef SPECUNITS_UNITS_HPP
#define SPECUNITS_UNITS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specunits/circulant.hpp"
#include "specunits/exact_cyclo.hpp"

namespace specunits {

// Rational spectral units u (u * u^* = delta_0) of finite order on Z_n.
//
// Every eigenvalue of such a unit is a root of unity of order dividing
// L = spectrum_conductor(n), so eigenvalues are carried as exponents of
// zeta_L. A rational vector's spectrum is Galois covariant:
//
//     S[j*k mod n] = galois(S[j], lifted_multiplier(n, k))    for k in Z_n^*,
//
// hence a finite-order unit is fixed by S[0] = +-1 together with one value
// per divisor j of n (each index orbit under Z_n^* contains exactly one
// divisor). allowed_exponents() lists the admissible value per divisor; the
// group of finite-order units is the product of these choices.

/// k in Z_n^*, ascending. Z_1^* = {0}.
std::vector<int> units_mod(int n);

/// Multiplier acting on conductor spectrum_conductor(n): k itself when n is
/// even or k is odd, k + n when n is odd and k even. Always odd for odd n,
/// so zeta_2n^e -> zeta_2n^(e k) picks up the sign flip on even k.
int lifted_multiplier(int n, int k);

/// Divisors j of n with 1 <= j < n; index 0 forms its own orbit.
std::vector<int> orbit_reps(int n);
/// { j*k mod n : k in Z_n^* }, ascending.
std::vector<int> orbit_of(int n, int j);

/// Z_n^* - Z_n^*, brute-forced. Equals Z_n for odd n and the even residues
/// for even n.
std::vector<int> delta_set(int n);

/// Admissible eigenvalues at divisor j, ascending by exponent over
/// spectrum_conductor(n):
///   n odd:              multiples of j  (2n/j values, the +-(n/j)-th roots)
///   n even, n/j even:   multiples of j  (n/j values)
///   n even, n/j odd:    multiples of j/2 (2n/j values)
/// Throws UsageError unless j is a proper divisor of n.
std::vector<RootExp> allowed_exponents(int n, int j);

struct EigenProfile {
  int n = 1;
  int sign0 = 1;                  // eigenvalue at index 0
  std::map<int, RootExp> choices;  // divisor -> eigenvalue

  friend bool operator==(const EigenProfile&, const EigenProfile&) = default;
};

/// Throws UsageError if a divisor is missing, unexpected, or carries a value
/// outside allowed_exponents().
void validate(const EigenProfile& profile);

/// Full eigenvalue list obtained by Galois-propagating each divisor's value
/// across its orbit.
Spectrum expand(const EigenProfile& profile);

/// Vector with u * star(u) = delta_0, checked on construction.
class SpectralUnit {
 public:
  /// Throws DomainError when u is not a spectral unit.
  explicit SpectralUnit(CyclicVector u);

  const CyclicVector& vector() const { return u_; }
  int n() const { return u_.n(); }

  friend bool operator==(const SpectralUnit&, const SpectralUnit&) = default;
  friend auto operator<=>(const SpectralUnit& a, const SpectralUnit& b) { return a.u_ <=> b.u_; }

 private:
  CyclicVector u_;
};

/// Inverse transform of expand(profile). Rationality and unitarity are
/// asserted; failure raises InternalError.
SpectralUnit unit_from_profile(const EigenProfile& profile);

/// Walks every profile of Z_n in lexicographic order: sign0 (+1 before -1),
/// then each divisor's exponent ascending, divisors ascending with the
/// smallest divisor varying slowest.
class ProfileCursor {
 public:
  explicit ProfileCursor(int n);

  const EigenProfile& current() const { return profile_; }
  /// Moves to the next profile; false once the space is exhausted.
  bool advance();

 private:
  void sync();

  EigenProfile profile_;
  std::vector<int> reps_;
  std::vector<std::vector<RootExp>> options_;
  std::vector<std::size_t> digits_;  // [0] is the sign digit
};

/// Calls visit on every finite-order unit of Z_n in ProfileCursor order until
/// visit returns false. Returns the number of units visited.
std::uint64_t enumerate_units(int n, const std::function<bool(const SpectralUnit&)>& visit);
/// All finite-order units of Z_n (group_order(n) of them).
std::vector<SpectralUnit> enumerate_units(int n);

/// Orders of the cyclic factors, descending.
struct GroupStructure {
  std::vector<std::uint64_t> factors;

  /// Product of factors; throws DomainError on 64-bit overflow.
  std::uint64_t order() const;
  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

GroupStructure group_structure(int n);
std::uint64_t group_order(int n);

bool is_spectral_unit(const CyclicVector& u);

class UnitOrder {
 public:
  static UnitOrder finite(std::uint64_t order) { return UnitOrder(order); }
  static UnitOrder infinite() { return UnitOrder(std::nullopt); }

  bool is_finite() const { return order_.has_value(); }
  /// Throws DomainError for infinite order.
  std::uint64_t value() const;
  /// Decimal order, or "infinite".
  std::string to_string() const;

  friend bool operator==(const UnitOrder&, const UnitOrder&) = default;

 private:
  explicit UnitOrder(std::optional<std::uint64_t> order) : order_(order) {}
  std::optional<std::uint64_t> order_;
};

/// Finite iff every eigenvalue is a root of unity; then the lcm of their
/// orders. The CyclicVector overload throws DomainError when u is not a
/// spectral unit.
UnitOrder unit_order(const SpectralUnit& u);
UnitOrder unit_order(const CyclicVector& u);

/// True iff S[0] = +-1 and S[j*k] = galois(S[j], lifted_multiplier(n, k)) for
/// all j != 0 and k in Z_n^*.
bool check_galois_relations(const Spectrum& s);

enum class ConnectPolicy {
  rosenblatt,  // eigenvalue 1 wherever the quotient is undetermined
  enumerate,   // every admissible root-of-unity filling of those orbits
};

struct ConnectedUnit {
  CyclicVector u;
  UnitOrder order;
};

/// Units u with convolve(u, a) = b. Eigenvalues at indices where F_a is
/// nonzero are forced to F_b / F_a; the remaining indices (whole Galois
/// orbits, identical for a and b) are filled per policy. Only fillings with
/// a rational inverse transform are returned.
///
/// Throws UsageError on modulus mismatch, DomainError when a and b are not
/// homometric, InconsistencyError when the zero sets of F_a and F_b differ
/// or fail to be unions of orbits.
std::vector<ConnectedUnit> connect(const CyclicVector& a, const CyclicVector& b, ConnectPolicy policy);

}  // namespace specunits

#endif  // SPECUNITS_UNITS_HPP
