#include <gtest/gtest.h>

#include "conclab/conclab.hpp"
#include "oracles.hpp"

using namespace conclab;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

LinkFamilySpec spec(unsigned long m, const char* j, const char* j0 = "unknot") {
  LinkFamilySpec s;
  s.m = m;
  s.J = parse_knot(j);
  s.J0_alexander = *normalize_alexander(resolve_polynomial(j0)).alexander();
  return s;
}

PolySet golden() { return parse_polyset("t^2 - 3t + 1"); }

DTable hlr_table() {
  return DTable{FiniteAbelianGroup::cyclic(9), {{{0}, R(0)}, {{3}, R(2)}, {{6}, R(2)}}, "test"};
}

}  // namespace

TEST(Covering, Examples) {
  JumpFunction f = covering_jump_function(spec(1, "trefoil"));
  EXPECT_EQ(f.ambient_period, 3);
  ASSERT_EQ(f.jumps.size(), 2U);
  EXPECT_EQ(f.jumps[0], (Jump{Position::exact_at(R(1, 2)), -4}));
  EXPECT_EQ(f.jumps[1], (Jump{Position::exact_at(R(5, 2)), 4}));
  EXPECT_TRUE(covering_jump_function(spec(1, "unknot")).jumps.empty());
  JumpFunction five = covering_jump_function(spec(2, "trefoil"));
  EXPECT_EQ(five.ambient_period, 5);
  EXPECT_EQ(five.jumps[0].position.lo, R(5, 6));
  EXPECT_EQ(five.jumps[1].position.lo, R(25, 6));
}

TEST(Covering, EqualsTwiceTheJumpFunctionScaled) {
  for (unsigned long m = 1; m <= 6; ++m) {
    LinkFamilySpec s = spec(m, "trefoil");
    JumpFunction j = jump_function(s.J);
    EXPECT_EQ(covering_jump_function(s), scale_jump_function(add_jump_functions(j, j), s.q()));
  }
}

TEST(PeriodCheck, Examples) {
  PrimeSetComplement none = excluded_primes(PolySet::unit(), 2);
  auto three = period_coprimality_check(R(3), none);
  EXPECT_EQ(three.verdict, Verdict::Obstructed);
  EXPECT_EQ(three.escaping_primes, std::vector<Integer>{3});

  auto one = period_coprimality_check(R(1), excluded_primes(golden(), 2));
  EXPECT_EQ(one.verdict, Verdict::NotObstructed);
  EXPECT_EQ(one.witness, Integer(1));

  PrimeSetComplement three_five;
  three_five.d = 2;
  three_five.excluded = {3, 5};
  auto frac = period_coprimality_check(R(15, 2), three_five);
  EXPECT_EQ(frac.verdict, Verdict::NotObstructed);
  EXPECT_EQ(frac.witness, Integer(15));
  EXPECT_THROW(period_coprimality_check(R(0), none), Error);
}

TEST(PeriodCheck, AgreesWithBruteForceMultiples) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(1, 60);
  std::uniform_int_distribution<long> den(1, 6);
  const std::vector<Integer> pool{2, 3, 5, 7, 11, 13};
  std::bernoulli_distribution pick(0.5);
  for (int trial = 0; trial < 300; ++trial) {
    PrimeSetComplement ex;
    for (const auto& p : pool)
      if (pick(rng)) ex.excluded.push_back(p);
    Rational c0 = make_rational(num(rng), den(rng));
    auto check = period_coprimality_check(c0, ex);
    auto brute = oracle::brute_escaping_period(c0, ex.excluded, 10000);
    EXPECT_EQ(check.verdict == Verdict::NotObstructed, brute.has_value()) << to_string(c0);
    if (brute) {
      EXPECT_EQ(check.witness, brute);
    }
  }
}

TEST(Topological, Examples) {
  EXPECT_EQ(obstruct_topological(spec(1, "trefoil"), 2, PolySet::unit()).verdict, Verdict::Obstructed);
  EXPECT_EQ(obstruct_topological(spec(1, "unknot"), 2, PolySet::unit()).verdict, Verdict::NotObstructed);
  auto g = obstruct_topological(spec(1, "trefoil"), 2, golden());
  EXPECT_EQ(g.verdict, Verdict::Obstructed);
  EXPECT_EQ(g.excluded.excluded, std::vector<Integer>{5});
  EXPECT_EQ(g.period.c0, 3);
}

TEST(Topological, TrefoilMirrorSumIsZero) {
  auto r = obstruct_topological(spec(3, "trefoil # mirror(trefoil)"), 2, PolySet::unit());
  EXPECT_EQ(r.period.kind, PeriodResult::Kind::ZeroFunction);
  EXPECT_EQ(r.verdict, Verdict::NotObstructed);
}

TEST(Topological, Rejections) {
  try {
    obstruct_topological(spec(2, "trefoil"), 2, golden());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInPrimeSet);
  }
  try {
    obstruct_topological(spec(1, "trefoil"), 3, PolySet::unit());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedDegree);
  }
}

TEST(SurgeryModelBuild, Examples) {
  auto m = build_surgery_model(spec(1, "unknot"));
  EXPECT_EQ(m.n, 9U);
  EXPECT_EQ(m.h1_M, FiniteAbelianGroup::cyclic(9));
  EXPECT_EQ(m.h1_M0_order, 1);
  EXPECT_EQ(m.core_polynomial, torus_knot_alexander(3, 2));
  try {
    build_surgery_model(spec(1, "unknot", "trefoil"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoprimalityViolation);
  }
  EXPECT_THROW(build_surgery_model(spec(2, "unknot", "figure-eight")), Error);
  auto ok = build_surgery_model(spec(1, "unknot", "figure-eight"));
  EXPECT_EQ(ok.h1_M0_order, 5);
  try {
    build_surgery_model(spec(4, "unknot"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrime);
  }
}

TEST(Smooth, ExternalTable) {
  auto r = obstruct_smooth(spec(1, "trefoil"), PolySet::unit(), hlr_table());
  EXPECT_EQ(r.verdict, Verdict::Obstructed);
  EXPECT_EQ(r.dbar_mode, "external");
  ASSERT_EQ(r.vanishing.candidates.size(), 1U);
  EXPECT_EQ(r.vanishing.candidates[0].elements, (std::vector<Element>{{0}, {3}, {6}}));

  DTable zero{FiniteAbelianGroup::cyclic(9), {{{0}, R(0)}, {{3}, R(0)}, {{6}, R(0)}}, "test"};
  EXPECT_EQ(obstruct_smooth(spec(1, "trefoil"), PolySet::unit(), zero).verdict, Verdict::NotObstructed);

  DTable wrong{FiniteAbelianGroup::cyclic(3), {{{0}, R(0)}}, "test"};
  EXPECT_THROW(obstruct_smooth(spec(1, "trefoil"), PolySet::unit(), wrong), Error);
}

TEST(Smooth, ComputedTorusKnotOnlyMode) {
  // Regression value: 9-surgery on T(3,2) has dbar = 0 at 3 and 6.
  auto r = obstruct_smooth(spec(1, "unknot"), PolySet::unit(), std::nullopt);
  EXPECT_EQ(r.dbar_mode, "computed");
  ASSERT_TRUE(r.dbar_table.has_value());
  EXPECT_EQ(*r.dbar_table->at({3}), 0);
  EXPECT_EQ(*r.dbar_table->at({6}), 0);
  EXPECT_EQ(r.verdict, Verdict::NotObstructed);
}

TEST(Smooth, MissingDataIsInconclusive) {
  auto r = obstruct_smooth(spec(1, "trefoil"), PolySet::unit(), std::nullopt);
  EXPECT_EQ(r.dbar_mode, "unavailable");
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
  EXPECT_FALSE(r.vanishing.missing.empty());
}

TEST(Smooth, ExcludedPrimeRejected) {
  EXPECT_THROW(obstruct_smooth(spec(1, "trefoil"), parse_polyset("trefoil"), hlr_table()), Error);
}
