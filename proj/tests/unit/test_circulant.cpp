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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "specunits/errors.hpp"
#include "specunits/units.hpp"

namespace specunits {
namespace {

using oracle::vec;

const Subset kAllInterval1{0, 1, 4, 6};
const Subset kAllInterval2{0, 1, 3, 7};

CyclicVector set12(const Subset& s) { return from_set(12, s); }

TEST(Delta, IdentityAndTranslation) {
  const CyclicVector d0 = delta(12, 0);
  const CyclicVector a = set12({0, 4, 7});
  EXPECT_EQ(convolve(a, d0), a);
  // delta_1 translates a subset by one.
  EXPECT_EQ(convolve(delta(12, 1), a), set12({1, 5, 8}));
  EXPECT_EQ(delta(7, 6), vec({0, 0, 0, 0, 0, 0, 1}));
  EXPECT_THROW(delta(7, 7), UsageError);
}

TEST(Convolve, Examples) {
  EXPECT_EQ(convolve(delta(12, 1), delta(12, 1)), delta(12, 2));
  const CyclicVector u = vec({7, 4, -2, 1, 7, 4, -2, 1, -8, 4, -2, 1}, 15);
  EXPECT_EQ(convolve(u, set12({0, 3, 7})), set12({0, 4, 7}));
  EXPECT_THROW(convolve(delta(12, 0), delta(7, 0)), UsageError);
}

TEST(Star, ReversesIndices) {
  EXPECT_EQ(star(delta(12, 5)), delta(12, 7));
  EXPECT_EQ(star(set12(kAllInterval1)), set12({0, 6, 8, 11}));
  std::mt19937 rng(7);
  const CyclicVector a = oracle::random_vector(rng, 9);
  EXPECT_EQ(star(star(a)), a);
}

TEST(IntervalContent, AllIntervalTetrachords) {
  const CyclicVector expected = vec({4, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1});
  EXPECT_EQ(interval_content(set12(kAllInterval1)), expected);
  EXPECT_EQ(interval_content(set12(kAllInterval2)), expected);
  EXPECT_EQ(interval_content(delta(12, 3)), delta(12, 0));
}

TEST(IsHomometric, Examples) {
  EXPECT_TRUE(is_homometric(set12(kAllInterval1), set12(kAllInterval2)));
  std::mt19937 rng(11);
  const CyclicVector a = oracle::random_vector(rng, 10);
  EXPECT_TRUE(is_homometric(a, translate(a, 3)));
  EXPECT_FALSE(is_homometric(set12({0, 1}), set12({0, 2})));
  EXPECT_THROW(is_homometric(delta(3, 0), delta(4, 0)), UsageError);
}

TEST(Dft, BasicSpectra) {
  for (int n : {1, 2, 5, 12}) {
    const Spectrum s = dft(delta(n, 0));
    const int L = spectrum_conductor(n);
    for (const auto& v : s.values()) EXPECT_EQ(v, CycloNum(L, Rational(1)));
    if (n == 1) continue;
    const Spectrum t = dft(delta(n, 1));
    for (int j = 0; j < n; ++j) EXPECT_EQ(t[j], root(L, static_cast<long>(L / n) * j));
  }
}

TEST(Dft, ConductorIsDoubledForOddModulus) {
  EXPECT_EQ(dft(delta(7, 0)).conductor(), 14);
  EXPECT_EQ(dft(delta(12, 0)).conductor(), 12);
  EXPECT_EQ(dft(delta(1, 0)).conductor(), 2);
}

TEST(MagSqSpectrum, AllIntervalTetrachord) {
  const auto mags = mag_sq_spectrum(set12(kAllInterval1));
  const std::vector<long> expected{16, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2};
  ASSERT_EQ(mags.size(), expected.size());
  for (std::size_t j = 0; j < mags.size(); ++j) {
    ASSERT_TRUE(is_rational(mags[j]));
    EXPECT_EQ(as_rational(mags[j]), expected[j]) << "j = " << j;
  }
  for (const auto& v : mag_sq_spectrum(delta(9, 4))) EXPECT_EQ(v, CycloNum(18, Rational(1)));
}

TEST(Idft, Examples) {
  const int L = spectrum_conductor(12);
  std::vector<CycloNum> ones(12, CycloNum(L, Rational(1)));
  EXPECT_EQ(idft(Spectrum(ones)), delta(12, 0));
  std::vector<CycloNum> shift;
  for (int j = 0; j < 12; ++j) shift.push_back(root(12, j));
  EXPECT_EQ(idft(Spectrum(shift)), delta(12, 1));
}

TEST(Idft, IrrationalResultCarriesIndex) {
  std::vector<CycloNum> values(4, CycloNum(4, Rational(1)));
  values[1] = root(4, 1);  // i without its conjugate partner at index 3
  try {
    idft(Spectrum(values));
    FAIL() << "expected NonRationalResult";
  } catch (const NonRationalResult& e) {
    EXPECT_EQ(e.index(), 0u);
  }
  EXPECT_FALSE(idft_if_rational(Spectrum(values)));
}

TEST(Spectrum, RejectsWrongConductor) {
  EXPECT_THROW(Spectrum(std::vector<CycloNum>(7, CycloNum(7))), UsageError);
}

TEST(Sets, RoundTrip) {
  EXPECT_EQ(set12({0, 4, 7}), vec({1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(from_set(5, Subset{}), CyclicVector(5));
  EXPECT_EQ(to_set(set12(kAllInterval2)), kAllInterval2);
  EXPECT_THROW(to_set(vec({1, 2, 0})), DomainError);
  EXPECT_THROW(from_set(12, Subset{12}), UsageError);
}

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

class CirculantProperties : public ::testing::Test {
 protected:
  std::mt19937 rng{424242};
};

TEST_F(CirculantProperties, ConvolutionIsCommutativeAssociativeWithIdentity) {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = oracle::random_int(rng, 1, 16);
    const auto a = oracle::random_vector(rng, n);
    const auto b = oracle::random_vector(rng, n);
    const auto c = oracle::random_vector(rng, n);
    EXPECT_EQ(convolve(a, b), convolve(b, a));
    EXPECT_EQ(convolve(convolve(a, b), c), convolve(a, convolve(b, c)));
    EXPECT_EQ(convolve(a, delta(n, 0)), a);
  }
}

TEST_F(CirculantProperties, ConvolutionTheoremAndStarConjugation) {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = oracle::random_int(rng, 1, 16);
    const auto a = oracle::random_vector(rng, n);
    const auto b = oracle::random_vector(rng, n);
    const Spectrum fa = dft(a);
    const Spectrum fb = dft(b);
    const Spectrum fab = dft(convolve(a, b));
    const Spectrum fstar = dft(star(a));
    for (int j = 0; j < n; ++j) {
      EXPECT_EQ(fab[j], fa[j] * fb[j]);
      EXPECT_EQ(fstar[j], conj(fa[j]));
    }
  }
}

TEST_F(CirculantProperties, InverseTransformRoundTrips) {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = oracle::random_int(rng, 1, 16);
    const auto a = oracle::random_vector(rng, n);
    const Spectrum s = dft(a);
    EXPECT_EQ(idft(s), a);
    EXPECT_EQ(dft(idft(s)), s);
  }
}

TEST_F(CirculantProperties, RationalSpectraAreGaloisCovariant) {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = oracle::random_int(rng, 1, 16);
    const Spectrum s = dft(oracle::random_vector(rng, n));
    for (int k : units_mod(n)) {
      for (int j = 0; j < n; ++j) {
        EXPECT_EQ(s[static_cast<long>(j) * k], galois(s[j], lifted_multiplier(n, k)))
            << "n=" << n << " j=" << j << " k=" << k;
      }
    }
  }
}

TEST_F(CirculantProperties, MagnitudesAgreeWithIntervalContent) {
  int homometric_pairs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = oracle::random_int(rng, 2, 12);
    const int k = oracle::random_int(rng, 0, n);
    // Random subsets hit homometric pairs often enough; translates guarantee some.
    auto pick = [&] {
      Subset s;
      for (int i = 0; i < n; ++i) {
        if (static_cast<int>(s.size()) < k && oracle::random_int(rng, 0, 1) == 1) s.push_back(i);
      }
      return s;
    };
    const CyclicVector a = from_set(n, pick());
    const CyclicVector b = trial % 3 == 0 ? translate(star(a), oracle::random_int(rng, 0, n - 1))
                                          : from_set(n, pick());
    const bool by_intervals = is_homometric(a, b);
    const bool by_magnitudes = mag_sq_spectrum(a) == mag_sq_spectrum(b);
    EXPECT_EQ(by_intervals, by_magnitudes);
    homometric_pairs += by_intervals ? 1 : 0;
  }
  EXPECT_GT(homometric_pairs, 30);
}

TEST_F(CirculantProperties, MagnitudesMatchFloatingDft) {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = oracle::random_int(rng, 1, 16);
    const auto a = oracle::random_vector(rng, n, 10, 100);
    std::vector<double> af;
    for (const auto& q : a.entries()) af.push_back(q.get_d());
    const auto f = oracle::float_dft(af);
    const auto exact = mag_sq_spectrum(a);
    // |F(j)|^2 lies in the real subfield, not necessarily in Q.
    for (std::size_t j = 0; j < exact.size(); ++j) {
      const auto v = oracle::evaluate(exact[j]);
      EXPECT_NEAR(v.real(), std::norm(f[j]), 1e-9);
      EXPECT_NEAR(v.imag(), 0.0, 1e-9);
    }
  }
}

}  // namespace
}  // namespace specunits
