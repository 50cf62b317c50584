#include <gtest/gtest.h>

#include <random>

#include "conclab/conclab.hpp"
#include "oracles.hpp"

using namespace conclab;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

// Malformed text inside a field is a parse error; a wrong shape is a schema
// error. Both carry the path.
std::string decode_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::Schema || e.code() == ErrorCode::Parse) << to_string(e.code());
    return e.what();
  }
  ADD_FAILURE() << "no error raised";
  return {};
}

}  // namespace

TEST(Rationals, CanonicalText) {
  EXPECT_EQ(rational_to_json(R(6, -4)), "-3/2");
  EXPECT_EQ(rational_to_json(R(4, 2)), "2");
  EXPECT_EQ(rational_from_json(Json("10/4")), R(5, 2));
  EXPECT_EQ(rational_from_json(Json(7)), 7);
  EXPECT_THROW(rational_from_json(Json("1/0")), Error);
  EXPECT_THROW(rational_from_json(Json(0.5)), Error);
}

TEST(Integers, LargeValuesBecomeStrings) {
  Integer big("123456789012345678901234567890");
  EXPECT_TRUE(integer_to_json(big).is_string());
  EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
  EXPECT_EQ(integer_to_json(Integer(-5)), -5);
}

TEST(Polynomials, BothInputForms) {
  LaurentPoly f = parse_polynomial("t - 1 + t^-1");
  EXPECT_EQ(laurent_from_json(to_json(f)), f);
  EXPECT_EQ(laurent_from_json(Json("t-1+t^-1")), f);
  EXPECT_EQ(laurent_from_json(Json::parse(R"({"coeffs": [[-1, 1], [0, -1], [1, 1]]})")), f);
  EXPECT_EQ(alexander_from_json(Json("trefoil")).poly(), f);
  EXPECT_THROW(alexander_from_json(Json("t^2 - 2")), Error);
}

TEST(Polynomials, ParserForms) {
  EXPECT_EQ(parse_polynomial("2t^3 - (t - 1)^2"), parse_polynomial("2t^3 - t^2 + 2t - 1"));
  EXPECT_EQ(parse_polynomial("(t+1)(t-1)"), parse_polynomial("t^2 - 1"));
  EXPECT_EQ(parse_polynomial("-t^-2"), LaurentPoly::monomial(-1, -2));
  EXPECT_EQ(resolve_polynomial("T(2,5)"), torus_knot_alexander(2, 5).poly());
  EXPECT_THROW(parse_polynomial("t^"), Error);
  EXPECT_THROW(parse_polynomial("x + 1"), Error);
  EXPECT_THROW(parse_polynomial("(t+1)^-1"), Error);
}

TEST(Schema, ErrorsCarryPaths) {
  std::string m = decode_message([] { seifert_from_json(Json::parse(R"({"matrix": [[1, 2], ["a", 3]]})")); });
  EXPECT_NE(m.find("$.matrix[1][0]"), std::string::npos) << m;
  m = decode_message([] { pipeline_input_from_json(Json::parse(R"({"m": "one", "J": "trefoil"})")); });
  EXPECT_NE(m.find("$.m"), std::string::npos) << m;
  m = decode_message([] { dtable_from_json(Json::parse(R"({"group": {"invariant_factors": [9]}, "values": {"12": "0"}})")); });
  EXPECT_NE(m.find("$.values"), std::string::npos) << m;
}

TEST(RoundTrip, JumpFunctions) {
  for (const char* k : {"trefoil", "figure-eight", "trefoil # trefoil", "mirror(trefoil) # trefoil"}) {
    JumpFunction f = jump_function(parse_knot(k), 3);
    EXPECT_EQ(jump_function_from_json(to_json(f)), f) << k;
    EXPECT_EQ(canonical_dump(to_json(jump_function_from_json(to_json(f)))), canonical_dump(to_json(f)));
  }
  SeifertMatrix irr(RationalMatrix{{1, 1}, {0, 2}});
  JumpFunction g = jump_function(irr);
  JumpFunction back = jump_function_from_json(to_json(g));
  EXPECT_EQ(back, g);
  EXPECT_FALSE(back.exact);
}

TEST(RoundTrip, RandomSeifertMatrices) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    SeifertMatrix a(oracle::random_matrix(rng, 1 + trial % 4, 5));
    EXPECT_EQ(seifert_from_json(to_json(a)), a);
    LaurentPoly f = oracle::random_poly(rng, 6, 9);
    EXPECT_EQ(laurent_from_json(to_json(f)), f);
    EXPECT_EQ(laurent_from_json(Json(to_string(f))), f) << to_string(f);
  }
}

TEST(RoundTrip, Tables) {
  DTable t = large_surgery_table(9, VSequence({1, 0}));
  t.provenance = "computed";
  DTable back = dtable_from_json(to_json(t));
  EXPECT_EQ(back.group, t.group);
  EXPECT_EQ(back.values, t.values);
  EXPECT_EQ(back.provenance, t.provenance);
  FiniteAbelianGroup g({3, 9});
  EXPECT_EQ(group_from_json(to_json(g)), g);
  for (const auto& e : g.elements()) EXPECT_EQ(element_from_key(element_key(e), g), e);
  EXPECT_THROW(element_from_key("3", g), Error);
}

TEST(RoundTrip, PipelineInput) {
  Json in = Json::parse(R"({"m": 1, "J": "trefoil", "J0_alexander": "unit", "D": "t^2-3t+1"})");
  PipelineInput p = pipeline_input_from_json(in);
  EXPECT_EQ(p.spec.q(), 3U);
  EXPECT_EQ(p.spec.J, parse_knot("trefoil"));
  EXPECT_EQ(p.D.polys().size(), 1U);
  EXPECT_FALSE(p.dbar.has_value());
}

TEST(Canonical, SortedKeysAndNoWhitespace) {
  Json j{{"b", 1}, {"a", {{"z", "1/2"}, {"c", Json::array({1, 2})}}}};
  EXPECT_EQ(canonical_dump(j), R"({"a":{"c":[1,2],"z":"1/2"},"b":1})");
}

TEST(Reports, VerdictRecordsCarryIntermediates) {
  LinkFamilySpec s;
  s.J = parse_knot("trefoil");
  Json top = to_json(obstruct_topological(s, 2, PolySet::unit()));
  EXPECT_EQ(top["verdict"], "OBSTRUCTED");
  EXPECT_EQ(top["minimal_period"]["minimal_period"], "3");
  EXPECT_EQ(top["check"]["escaping_primes"], Json::array({3}));
  EXPECT_EQ(top["covering_jump_function"]["ambient_period"], "3");
  EXPECT_TRUE(top["excluded_primes"]["excluded"].empty());
}
