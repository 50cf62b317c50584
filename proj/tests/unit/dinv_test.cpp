#include <gtest/gtest.h>

#include <algorithm>

#include "conclab/conclab.hpp"

using namespace conclab;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

std::vector<Rational> lens_values(long p, long q) {
  std::vector<Rational> v;
  for (long i = 0; i < p; ++i) v.push_back(d_lens(p, q, i));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(DLens, Examples) {
  EXPECT_EQ(d_lens(1, 0, 0), 0);
  EXPECT_EQ(lens_values(2, 1), (std::vector<Rational>{R(-1, 4), R(1, 4)}));
  EXPECT_EQ(lens_values(3, 1), (std::vector<Rational>{R(-1, 6), R(-1, 6), R(1, 2)}));
}

TEST(DLens, ReversedNegates) {
  for (long i = 0; i < 7; ++i) EXPECT_EQ(d_lens(7, 3, i, true), -d_lens(7, 3, i));
}

TEST(DLens, RecursionMatchesClosedForm) {
  for (long p = 1; p <= 50; ++p)
    for (long i = 0; i < p; ++i) EXPECT_EQ(d_lens(p, 1, i), d_lens_p1(p, i)) << p << " " << i;
}

TEST(DLens, OrientationReversalIsLensWithInverseParameter) {
  // -L(p, q) = L(p, p - q): the multisets of values agree up to sign.
  for (long p = 2; p <= 13; ++p) {
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto a = lens_values(p, q);
      auto b = lens_values(p, p - q);
      for (auto& x : b) x = -x;
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b) << p << "," << q;
    }
  }
}

TEST(DLens, Errors) {
  try {
    d_lens(4, 2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
  }
  EXPECT_THROW(d_lens(5, 1, 5), Error);
  EXPECT_THROW(d_lens(0, 1, 0), Error);
}

TEST(VSequenceType, Invariants) {
  EXPECT_NO_THROW(VSequence({2, 1, 1, 0}));
  EXPECT_THROW(VSequence({2, 0}), Error);
  EXPECT_THROW(VSequence({1, 2, 0}), Error);
  EXPECT_THROW(VSequence({1}), Error);
  EXPECT_THROW(VSequence(std::vector<long>{}), Error);
  EXPECT_EQ(VSequence({2, 1, 1, 0}).genus(), 3U);
  EXPECT_EQ(VSequence({2, 1, 1, 0}).at(10), 0);
}

TEST(VSequenceLSpace, Examples) {
  EXPECT_EQ(v_sequence_lspace(AlexanderPolynomial::unit()), VSequence::zero());
  EXPECT_EQ(v_sequence_lspace(torus_knot_alexander(2, 3)), VSequence({1, 0}));
  EXPECT_EQ(v_sequence_lspace(torus_knot_alexander(3, 4)), VSequence({1, 1, 1, 0}));
  AlexanderPolynomial sum(torus_knot_alexander(3, 2).poly() * torus_knot_alexander(2, 3).poly());
  EXPECT_FALSE(is_lspace_knot_polynomial(sum));
  try {
    v_sequence_lspace(sum);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLSpaceKnotPolynomial);
  }
  EXPECT_FALSE(is_lspace_knot_polynomial(*normalize_alexander(parse_polynomial("-t+3-t^-1")).alexander()));
}

TEST(LargeSurgery, UnknotIsLensSpace) {
  for (long n = 1; n <= 12; ++n)
    for (long i = 0; i < n; ++i) EXPECT_EQ(d_large_surgery(n, VSequence::zero(), i), d_lens(n, 1, i));
}

TEST(LargeSurgery, TrefoilNineSurgeryByFormula) {
  VSequence v({1, 0});
  auto table = large_surgery_table(9, v);
  ASSERT_TRUE(table.is_complete());
  for (long i = 0; i < 9; ++i) {
    const long j = std::min(i, 9 - i);
    const Rational expected = make_rational((2 * i - 9) * (2 * i - 9) - 9, 36) - 2 * (j == 0 ? 1 : 0);
    EXPECT_EQ(*table.at({i}), expected) << i;
  }
  auto bar = dbar(table);
  EXPECT_EQ(*bar.at({0}), 0);
  EXPECT_EQ(*bar.at({3}), 0);
  EXPECT_EQ(*bar.at({3}), *bar.at({6}));
}

TEST(LargeSurgery, CoefficientTooSmall) {
  VSequence v({2, 1, 1, 0});
  try {
    d_large_surgery(4, v, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SurgeryCoefficientTooSmall);
  }
  EXPECT_NO_THROW(d_large_surgery(5, v, 0));
}

TEST(Dbar, Examples) {
  DTable constant{FiniteAbelianGroup::cyclic(3), {{{0}, R(2)}, {{1}, R(2)}, {{2}, R(2)}}, ""};
  for (const auto& [e, v] : dbar(constant).values) EXPECT_EQ(v, 0);
  DTable two{FiniteAbelianGroup::cyclic(2), {{{0}, R(1, 4)}, {{1}, R(-1, 4)}}, ""};
  auto bar = dbar(two);
  EXPECT_EQ(*bar.at({1}), R(-1, 2));
  DTable missing{FiniteAbelianGroup::cyclic(2), {{{1}, R(1)}}, ""};
  EXPECT_THROW(dbar(missing), Error);
}

TEST(Vanishing, Examples) {
  auto g = FiniteAbelianGroup::cyclic(9);
  auto obstructed = dbar_vanishing_obstruction(g, 3, {{{0}, R(0)}, {{3}, R(2)}, {{6}, R(2)}});
  EXPECT_EQ(obstructed.outcome, VanishingResult::Outcome::Obstructed);
  ASSERT_EQ(obstructed.failures.size(), 1U);
  EXPECT_EQ(obstructed.failures[0].second, Element{3});

  auto passes = dbar_vanishing_obstruction(g, 3, {{{0}, R(0)}, {{3}, R(0)}, {{6}, R(0)}});
  EXPECT_EQ(passes.outcome, VanishingResult::Outcome::Passes);
  ASSERT_TRUE(passes.witness.has_value());

  auto partial = dbar_vanishing_obstruction(g, 3, {{{0}, R(0)}, {{3}, R(0)}});
  EXPECT_EQ(partial.outcome, VanishingResult::Outcome::Inconclusive);
  EXPECT_EQ(partial.missing, std::vector<Element>{{6}});
}

TEST(Vanishing, OneLineOfFourInRankTwo) {
  FiniteAbelianGroup g({3, 3});
  std::map<Element, Rational> values;
  for (const auto& e : g.elements()) values[e] = 1;
  values[{0, 0}] = 0;
  values[{1, 2}] = 0;
  values[{2, 1}] = 0;
  auto r = dbar_vanishing_obstruction(g, 3, values);
  EXPECT_EQ(r.outcome, VanishingResult::Outcome::Passes);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->elements, (std::vector<Element>{{0, 0}, {1, 2}, {2, 1}}));
}

TEST(Vanishing, NoSquareRootIsVacuouslyObstructed) {
  auto r = dbar_vanishing_obstruction(FiniteAbelianGroup::cyclic(3), 3, {{{0}, R(0)}, {{1}, R(0)}, {{2}, R(0)}});
  EXPECT_FALSE(r.order_is_square);
  EXPECT_EQ(r.outcome, VanishingResult::Outcome::Obstructed);
}
