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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "specunits/errors.hpp"

namespace specunits {
namespace {

RatPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}

RatPoly from_int(const oracle::IntPoly& p) {
  std::vector<Rational> v;
  for (long long x : p) v.emplace_back(static_cast<long>(x));
  return RatPoly(std::move(v));
}

// ---------------------------------------------------------------------------
// Rational / RatPoly
// ---------------------------------------------------------------------------

TEST(Rational, ParseAndPrintCanonical) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7/15")), "-7/15");
  EXPECT_EQ(to_string(parse_rational("+4")), "4");
  EXPECT_EQ(to_string(parse_rational(" 0/5 ")), "0");
  EXPECT_THROW(parse_rational("2/-3"), UsageError);
}

TEST(Rational, RejectsMalformed) {
  EXPECT_THROW(parse_rational(""), UsageError);
  EXPECT_THROW(parse_rational("1/"), UsageError);
  EXPECT_THROW(parse_rational("a"), UsageError);
  EXPECT_THROW(parse_rational("1.5"), UsageError);
  EXPECT_THROW(parse_rational("3/0"), DivisionByZero);
  EXPECT_THROW(make_rational(1, 0), DivisionByZero);
}

TEST(RatPoly, DivmodReconstructsDividend) {
  const RatPoly a = poly({3, 0, -2, 5, 1});
  const RatPoly b = poly({1, 2, 3});
  auto [q, r] = divmod(a, b);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_EQ(q * b + r, a);
  EXPECT_THROW(divmod(a, RatPoly{}), DivisionByZero);
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), poly({1, 0, 1}));
  // Frozen from oracle::cyclotomic(12): (x^12 - 1) / (Phi_1 Phi_2 Phi_3 Phi_4 Phi_6).
  ASSERT_EQ(oracle::cyclotomic(12), (oracle::IntPoly{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), poly({1, 0, -1, 0, 1}));
}

TEST(CyclotomicPolynomial, MatchesLongDivisionOracle) {
  for (int m = 1; m <= 60; ++m) {
    EXPECT_EQ(cyclotomic_polynomial(m), from_int(oracle::cyclotomic(m))) << "m = " << m;
  }
}

TEST(CyclotomicPolynomial, DegreeIsTotientAndDivisorProductIsXmMinus1) {
  for (int m = 1; m <= 60; ++m) {
    EXPECT_EQ(cyclotomic_polynomial(m).degree(), euler_phi(m)) << "m = " << m;
    RatPoly prod = poly({1});
    for (int d : divisors(m)) prod = prod * cyclotomic_polynomial(d);
    EXPECT_EQ(prod, RatPoly::monomial(1, static_cast<std::size_t>(m)) - poly({1})) << "m = " << m;
  }
}

// ---------------------------------------------------------------------------
// Roots and field arithmetic
// ---------------------------------------------------------------------------

TEST(CycloNum, Roots) {
  EXPECT_EQ(root(5, 0), CycloNum(5, Rational(1)));
  const CycloNum z4 = root(4, 1);
  EXPECT_EQ(z4.coeffs(), (std::vector<Rational>{0, 1}));
  EXPECT_EQ(root(3, 1) + root(3, 2), CycloNum(3, Rational(-1)));
  EXPECT_EQ(root(7, -1), root(7, 6));
}

TEST(CycloNum, FieldOperations) {
  EXPECT_EQ(root(12, 1) * root(12, 11), CycloNum(12, Rational(1)));
  EXPECT_EQ(conj(root(8, 1)), root(8, 7));

  const CycloNum x = CycloNum(5, Rational(1)) + root(5, 1);
  const CycloNum y = inv(x);
  EXPECT_EQ(x * y, CycloNum(5, Rational(1)));
  EXPECT_NEAR(std::abs(oracle::evaluate(y) - 1.0 / oracle::evaluate(x)), 0.0, 1e-12);

  EXPECT_EQ(pow(root(9, 2), 9), CycloNum(9, Rational(1)));
  EXPECT_EQ(pow(root(9, 2), -1), root(9, 7));
  EXPECT_EQ(-root(6, 0), CycloNum(6, Rational(-1)));
}

TEST(CycloNum, Errors) {
  EXPECT_THROW(root(4, 1) + root(8, 1), UsageError);
  EXPECT_THROW((void)(root(4, 1) == root(8, 2)), UsageError);
  EXPECT_THROW(inv(CycloNum(7)), DivisionByZero);
  EXPECT_THROW(galois(root(12, 1), 2), UsageError);
  EXPECT_THROW(embed(root(4, 1), 6), UsageError);
  EXPECT_THROW(CycloNum(0), UsageError);
}

TEST(CycloNum, Embed) {
  EXPECT_EQ(embed(root(3, 1), 6), root(6, 2));
  EXPECT_EQ(embed(CycloNum(1, Rational(1)), 12), CycloNum(12, Rational(1)));
  const CycloNum x = root(7, 1) + root(7, 2);
  const CycloNum e = embed(x, 14);
  EXPECT_EQ(e, root(14, 2) + root(14, 4));
  EXPECT_NEAR(std::abs(oracle::evaluate(e) - oracle::evaluate(x)), 0.0, 1e-12);
}

TEST(CycloNum, Galois) {
  EXPECT_EQ(galois(root(12, 1), 5), root(12, 5));
  EXPECT_EQ(galois(CycloNum(9, make_rational(3, 2)), 4), CycloNum(9, make_rational(3, 2)));
  EXPECT_EQ(galois(root(14, 1), 3), root(14, 3));
}

TEST(CycloNum, Rationality) {
  EXPECT_TRUE(is_rational(root(5, 0)));
  EXPECT_EQ(as_rational(root(5, 0)), 1);
  const CycloNum s = root(3, 0) + root(3, 1) + root(3, 2);
  EXPECT_TRUE(is_rational(s));
  EXPECT_EQ(as_rational(s), 0);
  // z + z^7 = z - z^3 modulo x^4 + 1.
  const CycloNum w = root(8, 1) + conj(root(8, 1));
  EXPECT_FALSE(is_rational(w));
  EXPECT_EQ(w.coeffs(), (std::vector<Rational>{0, 1, 0, -1}));
  EXPECT_THROW(as_rational(w), DomainError);
}

TEST(CycloNum, RootOfUnityDetection) {
  auto one = is_root_of_unity(CycloNum(6, Rational(1)));
  ASSERT_TRUE(one);
  EXPECT_EQ(one->order(), 1);

  auto r = is_root_of_unity(-embed(root(7, 1), 14));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->order(), 14);
  EXPECT_EQ(r->conductor, 14);

  // 3/5 + 4i/5 has modulus one but is not a root of unity.
  const CycloNum q = CycloNum(4, make_rational(3, 5)) + root(4, 1) * make_rational(4, 5);
  EXPECT_FALSE(is_root_of_unity(q));
  EXPECT_FALSE(is_root_of_unity(CycloNum(4)));

  // Odd conductor: -zeta_5 has order 10, located as zeta_10^7.
  auto odd = is_root_of_unity(-root(5, 1));
  ASSERT_TRUE(odd);
  EXPECT_EQ(odd->order(), 10);
  EXPECT_EQ(*odd, RootExp(10, 7));
}

TEST(CycloNum, EveryRootOfUnityIsFound) {
  for (int m = 1; m <= 30; ++m) {
    const int L = root_of_unity_bound(m);
    for (int e = 0; e < L; ++e) {
      // zeta_L^e lives in Q(zeta_m); build it numerically-independent of the detector.
      CycloNum x = (L == m) ? root(m, e) : (e % 2 == 0 ? root(m, e / 2) : -root(m, (e + m) / 2));
      auto r = is_root_of_unity(x);
      ASSERT_TRUE(r) << "m=" << m << " e=" << e;
      EXPECT_EQ(*r, RootExp(L, e));
      EXPECT_NEAR(std::abs(oracle::evaluate(x) - oracle::zeta(L, e)), 0.0, 1e-9);
    }
  }
}

// ---------------------------------------------------------------------------
// Properties over random elements
// ---------------------------------------------------------------------------

class CycloProperties : public ::testing::Test {
 protected:
  std::mt19937 rng{20260115};
};

TEST_F(CycloProperties, GaloisIsRingHomomorphismAndComposes) {
  for (int m = 1; m <= 30; ++m) {
    for (int trial = 0; trial < 3; ++trial) {
      const CycloNum x = oracle::random_cyclo(rng, m);
      const CycloNum y = oracle::random_cyclo(rng, m);
      for (int k = 1; k <= m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        EXPECT_EQ(galois(x + y, k), galois(x, k) + galois(y, k));
        EXPECT_EQ(galois(x * y, k), galois(x, k) * galois(y, k));
        for (int k2 = 1; k2 <= m; k2 += 3) {
          if (std::gcd(k2, m) != 1) continue;
          EXPECT_EQ(galois(galois(x, k), k2), galois(x, (k * k2) % m));
        }
      }
      EXPECT_EQ(conj(x), galois(x, m - 1));
      EXPECT_EQ(conj(conj(x)), x);
    }
  }
}

TEST_F(CycloProperties, InverseIsExact) {
  for (int m = 1; m <= 30; ++m) {
    for (int trial = 0; trial < 4; ++trial) {
      const CycloNum x = oracle::random_cyclo(rng, m);
      if (x.is_zero()) continue;
      EXPECT_EQ(x * inv(x), CycloNum(m, Rational(1))) << to_string(x);
    }
  }
}

TEST_F(CycloProperties, RationalityAgreesWithGaloisFixedness) {
  for (int m = 1; m <= 30; ++m) {
    for (int trial = 0; trial < 4; ++trial) {
      // Alternate genuinely rational elements and random ones; also traces, which are fixed.
      CycloNum x = oracle::random_cyclo(rng, m);
      if (trial == 1) x = CycloNum(m, oracle::random_rational(rng));
      if (trial == 2) {
        CycloNum trace(m);
        for (int k = 1; k <= m; ++k) {
          if (std::gcd(k, m) == 1) trace += galois(x, k);
        }
        x = trace;
      }
      bool fixed = true;
      for (int k = 1; k <= m; ++k) {
        if (std::gcd(k, m) == 1 && galois(x, k) != x) fixed = false;
      }
      EXPECT_EQ(is_rational(x), fixed) << "m=" << m << " x=" << to_string(x);
      if (trial == 2) EXPECT_TRUE(is_rational(x));
    }
  }
}

TEST_F(CycloProperties, ArithmeticMatchesFloatingEvaluation) {
  for (int m = 1; m <= 30; ++m) {
    const CycloNum x = oracle::random_cyclo(rng, m);
    const CycloNum y = oracle::random_cyclo(rng, m);
    const auto fx = oracle::evaluate(x);
    const auto fy = oracle::evaluate(y);
    EXPECT_NEAR(std::abs(oracle::evaluate(x * y) - fx * fy), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(oracle::evaluate(conj(x)) - std::conj(fx)), 0.0, 1e-8);
  }
}

}  // namespace
}  // namespace specunits
