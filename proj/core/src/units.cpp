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

#include "specunits/units.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "specunits/errors.hpp"

namespace specunits {

// ---------------------------------------------------------------------------
// Index orbits
// ---------------------------------------------------------------------------

std::vector<int> units_mod(int n) {
  if (n < 1) throw UsageError("modulus must be positive");
  std::vector<int> out;
  for (int k = 0; k < n; ++k) {
    if (std::gcd(k, n) == 1) out.push_back(k);
  }
  return out;
}

int lifted_multiplier(int n, int k) {
  if (n < 1) throw UsageError("modulus must be positive");
  k = ((k % n) + n) % n;
  if (n % 2 == 1 && k % 2 == 0) k += n;
  return k;
}

std::vector<int> orbit_reps(int n) {
  std::vector<int> reps = divisors(n);
  reps.pop_back();
  return reps;
}

std::vector<int> orbit_of(int n, int j) {
  if (j < 0 || j >= n) throw UsageError("orbit_of: index outside Z_n");
  std::set<int> orbit;
  for (int k : units_mod(n)) orbit.insert(static_cast<int>((static_cast<long>(j) * k) % n));
  return {orbit.begin(), orbit.end()};
}

std::vector<int> delta_set(int n) {
  const std::vector<int> u = units_mod(n);
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int a : u) {
    for (int b : u) hit[static_cast<std::size_t>(((a - b) % n + n) % n)] = true;
  }
  std::vector<int> out;
  for (int r = 0; r < n; ++r) {
    if (hit[static_cast<std::size_t>(r)]) out.push_back(r);
  }
  return out;
}

std::vector<RootExp> allowed_exponents(int n, int j) {
  if (n < 2 || j < 1 || j >= n || n % j != 0) {
    throw UsageError("allowed_exponents: " + std::to_string(j) + " is not a proper divisor of " +
                     std::to_string(n));
  }
  const int L = spectrum_conductor(n);
  int step = j;
  if (n % 2 == 0 && (n / j) % 2 == 1) step = j / 2;
  std::vector<RootExp> out;
  for (int e = 0; e < L; e += step) out.emplace_back(L, e);
  return out;
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

void validate(const EigenProfile& p) {
  if (p.n < 1) throw UsageError("profile modulus must be positive");
  if (p.sign0 != 1 && p.sign0 != -1) throw UsageError("profile sign0 must be +1 or -1");
  const std::vector<int> reps = orbit_reps(p.n);
  if (p.choices.size() != reps.size()) {
    throw UsageError("profile must choose exactly one eigenvalue per proper divisor of " +
                     std::to_string(p.n));
  }
  for (int j : reps) {
    auto it = p.choices.find(j);
    if (it == p.choices.end()) throw UsageError("profile missing divisor " + std::to_string(j));
    const auto allowed = allowed_exponents(p.n, j);
    if (!std::binary_search(allowed.begin(), allowed.end(), it->second)) {
      throw UsageError("eigenvalue at divisor " + std::to_string(j) + " is not admissible");
    }
  }
}

namespace {

// Writes galois(zeta_L^e, lifted k) at every index of the orbit of j.
void fill_orbit(std::vector<std::optional<CycloNum>>& values, int n, int j, int e) {
  const int L = spectrum_conductor(n);
  for (int k : units_mod(n)) {
    const auto i = static_cast<std::size_t>((static_cast<long>(j) * k) % n);
    CycloNum v = root(L, static_cast<long>(e) * lifted_multiplier(n, k));
    if (values[i] && *values[i] != v) {
      throw InternalError("eigenvalue orbit of " + std::to_string(j) + " is inconsistent at index " +
                          std::to_string(i));
    }
    values[i] = std::move(v);
  }
}

// Odometer step over a mixed-radix counter, last digit fastest.
bool next_digits(std::vector<std::size_t>& digits, const std::vector<std::vector<RootExp>>& options) {
  for (std::size_t pos = digits.size(); pos-- > 0;) {
    if (++digits[pos] < options[pos].size()) return true;
    digits[pos] = 0;
  }
  return false;
}

Spectrum collect(std::vector<std::optional<CycloNum>>& values) {
  std::vector<CycloNum> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) throw InternalError("eigenvalue at index " + std::to_string(i) + " left unset");
    out.push_back(std::move(*values[i]));
  }
  return Spectrum(std::move(out));
}

}  // namespace

Spectrum expand(const EigenProfile& p) {
  validate(p);
  const int L = spectrum_conductor(p.n);
  std::vector<std::optional<CycloNum>> values(static_cast<std::size_t>(p.n));
  values[0] = CycloNum(L, Rational(p.sign0));
  for (const auto& [j, r] : p.choices) fill_orbit(values, p.n, j, r.exponent);
  return collect(values);
}

SpectralUnit::SpectralUnit(CyclicVector u) : u_(std::move(u)) {
  if (!is_spectral_unit(u_)) throw DomainError("vector is not a spectral unit");
}

SpectralUnit unit_from_profile(const EigenProfile& p) {
  auto u = idft_if_rational(expand(p));
  if (!u) throw InternalError("admissible eigen profile produced an irrational vector");
  try {
    return SpectralUnit(std::move(*u));
  } catch (const DomainError&) {
    throw InternalError("admissible eigen profile produced a non-unit");
  }
}

ProfileCursor::ProfileCursor(int n) : reps_(orbit_reps(n)) {
  profile_.n = n;
  for (int j : reps_) options_.push_back(allowed_exponents(n, j));
  digits_.assign(reps_.size() + 1, 0);
  sync();
}

void ProfileCursor::sync() {
  profile_.sign0 = digits_[0] == 0 ? 1 : -1;
  for (std::size_t i = 0; i < reps_.size(); ++i) profile_.choices[reps_[i]] = options_[i][digits_[i + 1]];
}

bool ProfileCursor::advance() {
  for (std::size_t pos = digits_.size(); pos-- > 0;) {
    const std::size_t radix = pos == 0 ? 2 : options_[pos - 1].size();
    if (++digits_[pos] < radix) {
      sync();
      return true;
    }
    digits_[pos] = 0;
  }
  sync();
  return false;
}

std::uint64_t enumerate_units(int n, const std::function<bool(const SpectralUnit&)>& visit) {
  ProfileCursor cursor(n);
  std::uint64_t count = 0;
  do {
    ++count;
    if (!visit(unit_from_profile(cursor.current()))) break;
  } while (cursor.advance());
  return count;
}

std::vector<SpectralUnit> enumerate_units(int n) {
  std::vector<SpectralUnit> out;
  enumerate_units(n, [&](const SpectralUnit& u) {
    out.push_back(u);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Group structure
// ---------------------------------------------------------------------------

std::uint64_t GroupStructure::order() const {
  std::uint64_t order = 1;
  for (std::uint64_t f : factors) {
    if (__builtin_mul_overflow(order, f, &order)) throw DomainError("group order overflows 64 bits");
  }
  return order;
}

GroupStructure group_structure(int n) {
  GroupStructure g;
  g.factors.push_back(2);
  for (int j : orbit_reps(n)) g.factors.push_back(allowed_exponents(n, j).size());
  std::sort(g.factors.rbegin(), g.factors.rend());
  return g;
}

std::uint64_t group_order(int n) { return group_structure(n).order(); }

// ---------------------------------------------------------------------------
// Unit predicates
// ---------------------------------------------------------------------------

bool is_spectral_unit(const CyclicVector& u) { return interval_content(u) == delta(u.n(), 0); }

std::uint64_t UnitOrder::value() const {
  if (!order_) throw DomainError("unit has infinite order");
  return *order_;
}

std::string UnitOrder::to_string() const { return order_ ? std::to_string(*order_) : "infinite"; }

UnitOrder unit_order(const SpectralUnit& u) {
  std::uint64_t order = 1;
  const Spectrum s = dft(u.vector());
  for (const CycloNum& xi : s.values()) {
    auto r = is_root_of_unity(xi);
    if (!r) return UnitOrder::infinite();
    order = std::lcm(order, static_cast<std::uint64_t>(r->order()));
  }
  return UnitOrder::finite(order);
}

UnitOrder unit_order(const CyclicVector& u) {
  if (!is_spectral_unit(u)) throw DomainError("unit_order: vector is not a spectral unit");
  return unit_order(SpectralUnit(u));
}

bool check_galois_relations(const Spectrum& s) {
  const int n = s.n();
  const int L = s.conductor();
  if (s[0] != CycloNum(L, Rational(1)) && s[0] != CycloNum(L, Rational(-1))) return false;
  const std::vector<int> ks = units_mod(n);
  for (int j = 1; j < n; ++j) {
    for (int k : ks) {
      if (s[static_cast<long>(j) * k] != galois(s[j], lifted_multiplier(n, k))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Connecting homometric vectors
// ---------------------------------------------------------------------------

std::vector<ConnectedUnit> connect(const CyclicVector& a, const CyclicVector& b, ConnectPolicy policy) {
  if (a.n() != b.n()) throw UsageError("connect: modulus mismatch");
  if (!is_homometric(a, b)) throw DomainError("connect: vectors are not homometric");

  const int n = a.n();
  const int L = spectrum_conductor(n);
  const Spectrum fa = dft(a);
  const Spectrum fb = dft(b);
  const std::vector<int> ks = units_mod(n);

  std::vector<std::optional<CycloNum>> forced(static_cast<std::size_t>(n));
  std::set<int> free_reps;
  for (int j = 0; j < n; ++j) {
    const bool za = fa[j].is_zero();
    if (za != fb[j].is_zero()) {
      throw InconsistencyError("Fourier coefficient " + std::to_string(j) + " vanishes for only one vector");
    }
    if (!za) {
      forced[static_cast<std::size_t>(j)] = fb[j] * inv(fa[j]);
      continue;
    }
    for (int k : ks) {
      if (!fa[static_cast<long>(j) * k].is_zero()) {
        throw InconsistencyError("vanishing Fourier coefficients do not form whole Galois orbits");
      }
    }
    free_reps.insert(j == 0 ? 0 : std::gcd(j, n));
  }

  const std::vector<int> reps(free_reps.begin(), free_reps.end());
  std::vector<std::vector<RootExp>> options;
  for (int d : reps) {
    options.push_back(d == 0 ? std::vector<RootExp>{RootExp(L, 0), RootExp(L, L / 2)}
                             : allowed_exponents(n, d));
  }

  std::vector<ConnectedUnit> out;
  std::vector<std::size_t> digits(reps.size(), 0);
  for (;;) {
    std::vector<std::optional<CycloNum>> values = forced;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const int e = options[i][digits[i]].exponent;
      if (reps[i] == 0) {
        values[0] = root(L, e);
      } else {
        fill_orbit(values, n, reps[i], e);
      }
    }
    if (auto u = idft_if_rational(collect(values))) {
      if (convolve(*u, a) != b) throw InternalError("connecting unit does not map a onto b");
      UnitOrder order = unit_order(*u);
      out.push_back({std::move(*u), order});
    } else if (policy == ConnectPolicy::rosenblatt) {
      throw InternalError("unit eigenvalue filling produced an irrational vector");
    }
    if (policy == ConnectPolicy::rosenblatt) break;

    if (!next_digits(digits, options)) break;
  }
  return out;
}

}  // namespace specunits
