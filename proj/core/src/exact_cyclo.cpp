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

#include "specunits/exact_cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "specunits/errors.hpp"

namespace specunits {

// ---------------------------------------------------------------------------
// RatPoly
// ---------------------------------------------------------------------------

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

Rational RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (num.degree() < den.degree()) return {RatPoly{}, num};

  std::vector<Rational> rem = num.coeffs();
  const std::vector<Rational>& d = den.coeffs();
  const std::size_t dn = d.size();
  std::vector<Rational> quot(rem.size() - dn + 1);
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const Rational c = rem[shift + dn - 1] / d.back();
    quot[shift] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < dn; ++i) rem[shift + i] -= c * d[i];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational mag = abs(c);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) os << (mag != 1 ? "*x" : "x");
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Number theory helpers
// ---------------------------------------------------------------------------

int euler_phi(int m) {
  if (m < 1) throw UsageError("euler_phi: m must be positive");
  int result = m;
  int r = m;
  for (int p = 2; p * p <= r; ++p) {
    if (r % p != 0) continue;
    while (r % p == 0) r /= p;
    result -= result / p;
  }
  if (r > 1) result -= result / r;
  return result;
}

std::vector<int> divisors(int m) {
  if (m < 1) throw UsageError("divisors: m must be positive");
  std::vector<int> out;
  for (int d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

int root_of_unity_bound(int m) {
  if (m < 1) throw UsageError("conductor must be positive");
  return m % 2 == 0 ? m : 2 * m;
}

RatPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw UsageError("cyclotomic_polynomial: m must be positive");
  thread_local std::unordered_map<int, RatPoly> memo;
  if (auto it = memo.find(m); it != memo.end()) return it->second;

  RatPoly p = RatPoly::monomial(1, static_cast<std::size_t>(m)) - RatPoly::monomial(1, 0);
  for (int d : divisors(m)) {
    if (d == m) break;
    auto [q, r] = divmod(p, cyclotomic_polynomial(d));
    if (!r.is_zero()) throw InternalError("x^m - 1 not divisible by Phi_d");
    p = std::move(q);
  }
  memo.emplace(m, p);
  return p;
}

// ---------------------------------------------------------------------------
// RootExp
// ---------------------------------------------------------------------------

RootExp::RootExp(int conductor_, long exponent_) : conductor(conductor_) {
  if (conductor_ < 1) throw UsageError("root conductor must be positive");
  long e = exponent_ % conductor_;
  if (e < 0) e += conductor_;
  exponent = static_cast<int>(e);
}

int RootExp::order() const { return conductor / std::gcd(conductor, exponent); }

// ---------------------------------------------------------------------------
// Field context
// ---------------------------------------------------------------------------

namespace detail {

struct CycloContext {
  int m = 1;
  int phi = 1;
  // reductions[t - phi] lists (i, c) with x^t = sum c x^i  (mod Phi_m), phi <= t < m.
  std::vector<std::vector<std::pair<int, long>>> reductions;

  explicit CycloContext(int conductor) : m(conductor), phi(euler_phi(conductor)) {
    const RatPoly phi_poly = cyclotomic_polynomial(m);
    std::vector<Integer> modulus(phi + 1);
    for (int i = 0; i <= phi; ++i) {
      const Rational c = phi_poly.coeff(static_cast<std::size_t>(i));
      modulus[i] = c.get_num();
    }
    // cur holds x^t mod Phi_m, advanced one degree at a time.
    std::vector<Integer> cur(phi, 0);
    cur[phi - 1] = 1;
    for (int t = phi; t < m; ++t) {
      std::vector<Integer> next(phi + 1, 0);
      for (int i = 0; i < phi; ++i) next[i + 1] = cur[i];
      const Integer lead = next[phi];
      for (int i = 0; i <= phi; ++i) next[i] -= lead * modulus[i];
      std::vector<std::pair<int, long>> row;
      for (int i = 0; i < phi; ++i) {
        cur[i] = next[i];
        if (cur[i] == 0) continue;
        if (!cur[i].fits_slong_p()) throw InternalError("cyclotomic reduction table overflow");
        row.emplace_back(i, cur[i].get_si());
      }
      reductions.push_back(std::move(row));
    }
  }

  // folded has length m, indexed by exponent.
  std::vector<Rational> reduce(const std::vector<Rational>& folded) const {
    std::vector<Rational> out(folded.begin(), folded.begin() + phi);
    for (int t = phi; t < m; ++t) {
      const Rational& c = folded[t];
      if (c == 0) continue;
      for (const auto& [i, k] : reductions[t - phi]) out[i] += c * k;
    }
    return out;
  }
};

namespace {

std::shared_ptr<const CycloContext> context_for(int m) {
  if (m < 1) throw UsageError("cyclotomic conductor must be positive");
  thread_local std::unordered_map<int, std::shared_ptr<const CycloContext>> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, std::make_shared<const CycloContext>(m)).first;
  return it->second;
}

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------
// CycloNum
// ---------------------------------------------------------------------------

CycloNum::CycloNum() : CycloNum(1) {}

CycloNum::CycloNum(int conductor) : ctx_(detail::context_for(conductor)), coeffs_(ctx_->phi) {}

CycloNum::CycloNum(int conductor, const Rational& q) : CycloNum(conductor) { coeffs_[0] = q; }

CycloNum::CycloNum(std::shared_ptr<const detail::CycloContext> ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

CycloNum CycloNum::from_power_sum(int conductor, std::span<const Rational> c) {
  auto ctx = detail::context_for(conductor);
  std::vector<Rational> folded(ctx->m);
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (c[t] != 0) folded[t % ctx->m] += c[t];
  }
  auto coeffs = ctx->reduce(folded);
  return CycloNum(std::move(ctx), std::move(coeffs));
}

int CycloNum::conductor() const { return ctx_->m; }

bool CycloNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

void CycloNum::require_same_field(const CycloNum& o) const {
  if (ctx_->m != o.ctx_->m) {
    throw UsageError("conductor mismatch: " + std::to_string(ctx_->m) + " vs " +
                     std::to_string(o.ctx_->m) + " (embed explicitly)");
  }
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  require_same_field(o);
  const int m = ctx_->m;
  std::vector<Rational> folded(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      folded[(i + j) % m] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = ctx_->reduce(folded);
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CycloNum operator-(const CycloNum& a) {
  CycloNum r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  a.require_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// Free operations
// ---------------------------------------------------------------------------

CycloNum root(int m, long e) {
  const RootExp r(m, e);
  std::vector<Rational> c(static_cast<std::size_t>(r.exponent) + 1);
  c[r.exponent] = 1;
  return CycloNum::from_power_sum(m, c);
}

CycloNum root(const RootExp& r) { return root(r.conductor, r.exponent); }

CycloNum conj(const CycloNum& x) { return galois(x, -1); }

CycloNum galois(const CycloNum& x, long k) {
  const int m = x.conductor();
  if (std::gcd(static_cast<long>(m), k < 0 ? -k : k) != 1) {
    throw UsageError("galois: multiplier " + std::to_string(k) + " not coprime to conductor " +
                     std::to_string(m));
  }
  const long kk = ((k % m) + m) % m;
  std::vector<Rational> folded(m);
  for (std::size_t t = 0; t < x.coeffs_.size(); ++t) {
    if (x.coeffs_[t] != 0) folded[(static_cast<long>(t) * kk) % m] += x.coeffs_[t];
  }
  return CycloNum(x.ctx_, x.ctx_->reduce(folded));
}

CycloNum embed(const CycloNum& x, int M) {
  const int m = x.conductor();
  if (M < 1 || M % m != 0) {
    throw UsageError("embed: conductor " + std::to_string(m) + " does not divide " + std::to_string(M));
  }
  const std::size_t step = static_cast<std::size_t>(M / m);
  std::vector<Rational> c(x.coeffs_.size() == 0 ? 0 : (x.coeffs_.size() - 1) * step + 1);
  for (std::size_t t = 0; t < x.coeffs_.size(); ++t) c[t * step] = x.coeffs_[t];
  return CycloNum::from_power_sum(M, c);
}

CycloNum inv(const CycloNum& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(x.conductor()) + ")");
  // Extended Euclid: s * x == gcd (mod Phi_m), and the gcd is a nonzero constant.
  RatPoly r0 = cyclotomic_polynomial(x.conductor());
  RatPoly r1(x.coeffs_);
  RatPoly s0;
  RatPoly s1 = RatPoly::monomial(1, 0);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw InternalError("inverse: gcd with cyclotomic polynomial is not constant");
  const Rational scale = 1 / r0.leading();
  std::vector<Rational> c = s0.coeffs();
  for (auto& v : c) v *= scale;
  return CycloNum::from_power_sum(x.conductor(), c);
}

CycloNum pow(const CycloNum& x, long e) {
  if (e < 0) return pow(inv(x), -e);
  CycloNum result(x.conductor(), Rational(1));
  CycloNum base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool is_rational(const CycloNum& x) {
  const auto& c = x.coeffs();
  return std::all_of(c.begin() + 1, c.end(), [](const Rational& q) { return q == 0; });
}

Rational as_rational(const CycloNum& x) {
  if (!is_rational(x)) throw DomainError("value is not rational: " + to_string(x));
  return x.coeffs()[0];
}

namespace {

// zeta_L^e written over conductor m, where L = root_of_unity_bound(m).
CycloNum bound_root(int m, int L, int e) {
  if (L == m) return root(m, e);
  // m odd, L = 2m: zeta_2m^e = zeta_m^(e/2) for even e, -zeta_m^((e+m)/2) for odd e.
  if (e % 2 == 0) return root(m, e / 2);
  return -root(m, (e + m) / 2);
}

}  // namespace

std::optional<RootExp> is_root_of_unity(const CycloNum& x) {
  if (x.is_zero()) return std::nullopt;
  const int m = x.conductor();
  const int L = root_of_unity_bound(m);
  const CycloNum one(m, Rational(1));
  if (pow(x, L) != one) return std::nullopt;
  for (int d : divisors(L)) {
    if (pow(x, d) != one) continue;
    const int step = L / d;
    for (int s = 0; s < d; ++s) {
      if (std::gcd(s, d) != 1) continue;
      if (bound_root(m, L, s * step) == x) return RootExp(L, s * step);
    }
    throw InternalError("root of unity of order " + std::to_string(d) + " not located");
  }
  throw InternalError("unreachable: x^L == 1 but no divisor order found");
}

std::string to_string(const CycloNum& x) {
  std::ostringstream os;
  bool first = true;
  const std::string z = "z" + std::to_string(x.conductor());
  for (std::size_t t = 0; t < x.coeffs().size(); ++t) {
    const Rational& c = x.coeffs()[t];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational mag = abs(c);
    if (t == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << z;
      if (t > 1) os << "^" << t;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace specunits
