#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "conclab/conclab.hpp"
#include "oracles.hpp"

using namespace conclab;

namespace {

LaurentPoly P(const char* s) { return parse_polynomial(s); }

}  // namespace

TEST(Normalize, UnitPolynomial) {
  std::vector<Integer> c{1};
  auto n = normalize_alexander(c);
  EXPECT_EQ(n.poly, LaurentPoly::constant(1));
  EXPECT_TRUE(n.alexander_normalized);
}

TEST(Normalize, TrefoilCoefficientsCentre) {
  std::vector<Integer> c{1, -1, 1};
  auto n = normalize_alexander(c);
  EXPECT_EQ(n.poly, P("t - 1 + t^-1"));
  EXPECT_TRUE(n.alexander_normalized);
  EXPECT_EQ(n.unit_sign, 1);
}

TEST(Normalize, AsymmetricIsPlainPolynomial) {
  std::vector<Integer> c{1, -2};
  auto n = normalize_alexander(c);
  EXPECT_FALSE(n.alexander_normalized);
  EXPECT_FALSE(n.alexander().has_value());
  EXPECT_EQ(n.poly.eval_at_one(), -1);
}

TEST(Normalize, NegativeValueAtOneIsFlipped) {
  auto n = normalize_alexander(P("-t^3 + t^2 - t"));
  EXPECT_TRUE(n.alexander_normalized);
  EXPECT_EQ(n.unit_sign, -1);
  EXPECT_EQ(n.poly, P("t - 1 + t^-1"));
}

TEST(Normalize, EmptyInputRejected) {
  std::vector<Integer> c;
  try {
    normalize_alexander(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
  }
}

TEST(Normalize, OddSpanCentresWithExtraPositiveExponent) {
  LaurentPoly f = P("t^5 + 2t^6").centered();
  EXPECT_EQ(f.min_exponent(), 0);
  EXPECT_EQ(f.max_exponent(), 1);
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(P("t - 1"), P("t + 1")), 2);
  EXPECT_EQ(resultant(P("t^2 - t + 1"), LaurentPoly::constant(1)), 1);
  EXPECT_EQ(resultant(P("t^2 - t + 1"), P("t^2 - 1")), 3);
}

TEST(Resultant, ZeroRejected) {
  EXPECT_THROW(resultant(LaurentPoly{}, P("t")), Error);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    LaurentPoly f = oracle::random_poly(rng, 5, 4);
    LaurentPoly g = oracle::random_poly(rng, 5, 4);
    EXPECT_EQ(resultant(f, g), oracle::sylvester_resultant(f, g)) << f << " / " << g;
  }
}

TEST(Rd, Examples) {
  EXPECT_EQ(r_d(LaurentPoly::constant(1), 2), 1);
  EXPECT_EQ(r_d(LaurentPoly::constant(1), 7), 1);
  EXPECT_EQ(r_d(P("t^2 - t + 1"), 2), 3);
  EXPECT_EQ(r_d(P("t^2 - 3t + 1"), 2), 5);
  EXPECT_EQ(r_d(P("t - 1 + t^-1"), 2), 3);
}

TEST(Rd, CyclotomicFactorGivesZero) {
  // Phi_6 vanishes at a sixth root of unity.
  EXPECT_EQ(r_d(P("t^2 - t + 1"), 6), 0);
}

TEST(Rd, ZeroDegreeRejected) {
  EXPECT_THROW(r_d(P("t"), 0), Error);
}

TEST(Rd, AgreesWithFloatingRootProduct) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    LaurentPoly f = oracle::random_poly(rng, 4, 3);
    for (unsigned long d = 1; d <= 9; ++d) {
      long double approx = oracle::root_of_unity_product(f, d);
      Integer exact = r_d(f, d);
      EXPECT_NEAR(static_cast<long double>(exact.get_d()), approx, 1e-6L * (1 + approx)) << f << " d=" << d;
    }
  }
}

TEST(Rd, TorusKnotDoubleCovers) {
  // The double branched cover of T(2, 2k+1) is L(2k+1, 1).
  for (long k = 1; k <= 8; ++k) EXPECT_EQ(r_d(torus_knot_alexander(2, 2 * k + 1).poly(), 2), 2 * k + 1);
}

TEST(ExcludedPrimes, Examples) {
  EXPECT_TRUE(excluded_primes(PolySet::unit(), 2).excluded.empty());
  auto five = excluded_primes(PolySet({*normalize_alexander(P("t^2 - 3t + 1")).alexander()}), 2);
  EXPECT_EQ(five.excluded, std::vector<Integer>{5});
  EXPECT_FALSE(five.contains(5));
  EXPECT_TRUE(five.contains(3));
  EXPECT_FALSE(five.contains(9));
  auto three = excluded_primes(PolySet({torus_knot_alexander(2, 3)}), 2);
  EXPECT_EQ(three.excluded, std::vector<Integer>{3});
}

TEST(ExcludedPrimes, DegreeMustBePrimePower) {
  try {
    excluded_primes(PolySet::unit(), 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrimePower);
  }
  EXPECT_NO_THROW(excluded_primes(PolySet::unit(), 9));
}

TEST(ExcludedPrimes, UnionOverTheSet) {
  PolySet d({torus_knot_alexander(2, 3), torus_knot_alexander(2, 5), *normalize_alexander(P("t^2-3t+1")).alexander()});
  auto p = excluded_primes(d, 2);
  EXPECT_EQ(p.excluded, (std::vector<Integer>{3, 5}));
  EXPECT_EQ(p.orders, (std::vector<Integer>{3, 5, 5}));
}

TEST(PolySetType, EmptyRejected) {
  EXPECT_THROW(PolySet(std::vector<AlexanderPolynomial>{}), Error);
}

TEST(TorusKnot, Examples) {
  EXPECT_EQ(torus_knot_alexander(2, 3).poly(), P("t - 1 + t^-1"));
  EXPECT_EQ(torus_knot_alexander(2, 5).poly(), P("t^2 - t + 1 - t^-1 + t^-2"));
  EXPECT_EQ(torus_knot_alexander(3, 2), torus_knot_alexander(2, 3));
  EXPECT_EQ(torus_knot_alexander(3, 4).poly(), P("t^3 - t^2 + 1 - t^-2 + t^-3"));
}

TEST(TorusKnot, NonCoprimeRejected) {
  try {
    torus_knot_alexander(2, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
  }
}

TEST(Torsion, Examples) {
  EXPECT_TRUE(torsion_coefficients(AlexanderPolynomial::unit()).empty());
  EXPECT_EQ(torsion_coefficients(torus_knot_alexander(2, 3)), std::vector<Integer>{1});
  // t_0 = 1(-1) + 2(1) = 1 and t_1 = 1(1) = 1.
  EXPECT_EQ(torsion_coefficients(torus_knot_alexander(2, 5)), (std::vector<Integer>{1, 1}));
}

TEST(Torsion, MatchesBruteForceSum) {
  for (long a = 2; a <= 7; ++a) {
    for (long b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      auto f = torus_knot_alexander(a, b);
      EXPECT_EQ(torsion_coefficients(f), oracle::brute_torsion(f.poly())) << a << "," << b;
    }
  }
}

TEST(Primes, Factorize) {
  auto f = factorize(Integer(360));
  ASSERT_EQ(f.size(), 3U);
  EXPECT_EQ(f[0], (PrimePower{2, 3}));
  EXPECT_EQ(f[1], (PrimePower{3, 2}));
  EXPECT_EQ(f[2], (PrimePower{5, 1}));
  // Product of two primes above the trial-division range.
  Integer big = Integer(1000003) * Integer(998244353);
  auto g = factorize(big);
  ASSERT_EQ(g.size(), 2U);
  EXPECT_EQ(g[0].prime, 1000003);
  EXPECT_EQ(g[1].prime, 998244353);
  EXPECT_TRUE(as_prime_power(Integer(243)).has_value());
  EXPECT_FALSE(as_prime_power(Integer(12)).has_value());
}
