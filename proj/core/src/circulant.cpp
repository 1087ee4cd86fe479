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

#include "specunits/circulant.hpp"

#include <algorithm>
#include <string>

#include "specunits/errors.hpp"

namespace specunits {

namespace {

void require_same_modulus(const CyclicVector& a, const CyclicVector& b) {
  if (a.n() != b.n()) {
    throw UsageError("modulus mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
}

std::size_t mod(long v, long n) { return static_cast<std::size_t>(((v % n) + n) % n); }

}  // namespace

// ---------------------------------------------------------------------------
// CyclicVector
// ---------------------------------------------------------------------------

CyclicVector::CyclicVector(int n) {
  if (n < 1) throw UsageError("cyclic vector modulus must be positive");
  entries_.resize(static_cast<std::size_t>(n));
}

CyclicVector::CyclicVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw UsageError("cyclic vector must have at least one entry");
}

std::size_t CyclicVector::wrap(long k) const { return mod(k, static_cast<long>(entries_.size())); }

CyclicVector operator-(const CyclicVector& a) {
  CyclicVector r = a;
  for (auto& v : r.entries_) v = -v;
  return r;
}

int spectrum_conductor(int n) { return root_of_unity_bound(n); }

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

Spectrum::Spectrum(std::vector<CycloNum> values) : values_(std::move(values)) {
  if (values_.empty()) throw UsageError("spectrum must have at least one value");
  const int L = spectrum_conductor(n());
  for (const auto& v : values_) {
    if (v.conductor() != L) {
      throw UsageError("spectrum of length " + std::to_string(n()) + " needs conductor " +
                       std::to_string(L) + ", got " + std::to_string(v.conductor()));
    }
  }
}

const CycloNum& Spectrum::operator[](long j) const {
  return values_[mod(j, static_cast<long>(values_.size()))];
}

// ---------------------------------------------------------------------------
// Convolution algebra
// ---------------------------------------------------------------------------

CyclicVector delta(int n, int t) {
  if (t < 0 || t >= n) throw UsageError("delta: residue out of range");
  CyclicVector v(n);
  v[t] = 1;
  return v;
}

CyclicVector translate(const CyclicVector& a, int t) {
  CyclicVector r(a.n());
  for (int k = 0; k < a.n(); ++k) r[k + t] = a[k];
  return r;
}

CyclicVector convolve(const CyclicVector& a, const CyclicVector& b) {
  require_same_modulus(a, b);
  const int n = a.n();
  CyclicVector r(n);
  for (int k = 0; k < n; ++k) {
    if (a[k] == 0) continue;
    for (int i = 0; i < n; ++i) {
      if (b[i] != 0) r[k + i] += a[k] * b[i];
    }
  }
  return r;
}

CyclicVector star(const CyclicVector& a) {
  CyclicVector r(a.n());
  for (int k = 0; k < a.n(); ++k) r[-k] = a[k];
  return r;
}

CyclicVector interval_content(const CyclicVector& a) { return convolve(a, star(a)); }

bool is_homometric(const CyclicVector& a, const CyclicVector& b) {
  require_same_modulus(a, b);
  return interval_content(a) == interval_content(b);
}

// ---------------------------------------------------------------------------
// Exact Fourier transform
// ---------------------------------------------------------------------------

Spectrum dft(const CyclicVector& a) {
  const long n = a.n();
  const long L = spectrum_conductor(a.n());
  const long step = L / n;  // zeta_n = zeta_L^step
  std::vector<CycloNum> values;
  values.reserve(static_cast<std::size_t>(n));
  std::vector<Rational> acc(static_cast<std::size_t>(L));
  for (long j = 0; j < n; ++j) {
    std::fill(acc.begin(), acc.end(), Rational(0));
    for (long k = 0; k < n; ++k) {
      if (a[k] != 0) acc[mod(step * j * k, L)] += a[k];
    }
    values.push_back(CycloNum::from_power_sum(static_cast<int>(L), acc));
  }
  return Spectrum(std::move(values));
}

namespace {

// Value of the inverse transform at index k, before the rationality check.
CycloNum idft_entry(const Spectrum& s, long k) {
  const long n = s.n();
  const long L = s.conductor();
  const long step = L / n;
  std::vector<Rational> acc(static_cast<std::size_t>(L));
  for (long j = 0; j < n; ++j) {
    const auto& c = s[j].coeffs();
    const long shift = -step * j * k;
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (c[t] != 0) acc[mod(static_cast<long>(t) + shift, L)] += c[t];
    }
  }
  CycloNum v = CycloNum::from_power_sum(static_cast<int>(L), acc);
  v *= make_rational(1, n);
  return v;
}

}  // namespace

std::optional<CyclicVector> idft_if_rational(const Spectrum& s) {
  CyclicVector out(s.n());
  for (long k = 0; k < s.n(); ++k) {
    CycloNum v = idft_entry(s, k);
    if (!is_rational(v)) return std::nullopt;
    out[k] = v.coeffs()[0];
  }
  return out;
}

CyclicVector idft(const Spectrum& s) {
  CyclicVector out(s.n());
  for (long k = 0; k < s.n(); ++k) {
    CycloNum v = idft_entry(s, k);
    if (!is_rational(v)) {
      throw NonRationalResult(static_cast<std::size_t>(k),
                              "inverse transform is irrational at index " + std::to_string(k) + ": " +
                                  to_string(v));
    }
    out[k] = v.coeffs()[0];
  }
  return out;
}

std::vector<CycloNum> mag_sq_spectrum(const CyclicVector& a) {
  Spectrum s = dft(a);
  std::vector<CycloNum> out;
  out.reserve(s.values().size());
  for (const auto& v : s.values()) out.push_back(v * conj(v));
  return out;
}

// ---------------------------------------------------------------------------
// Subsets
// ---------------------------------------------------------------------------

CyclicVector from_set(int n, std::span<const int> elements) {
  CyclicVector v(n);
  for (int e : elements) {
    if (e < 0 || e >= n) {
      throw UsageError("residue " + std::to_string(e) + " outside Z_" + std::to_string(n));
    }
    v[e] = 1;
  }
  return v;
}

Subset to_set(const CyclicVector& a) {
  Subset s;
  for (int k = 0; k < a.n(); ++k) {
    if (a[k] == 1) {
      s.push_back(k);
    } else if (a[k] != 0) {
      throw DomainError("not a characteristic vector: entry " + std::to_string(k) + " is " +
                        to_string(a[k]));
    }
  }
  return s;
}

}  // namespace specunits
