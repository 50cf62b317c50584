#include "conclab/obstruct.hpp"

#include "conclab/error.hpp"
#include "conclab/primes.hpp"

namespace conclab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "OBSTRUCTED";
    case Verdict::NotObstructed: return "NOT_OBSTRUCTED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

JumpFunction covering_jump_function(const LinkFamilySpec& spec, unsigned precision) {
  SeifertMatrix doubled = connected_sum(spec.J, reverse(spec.J));
  return scale_jump_function(jump_function(doubled, 1, precision), spec.q());
}

PeriodCheck period_coprimality_check(const Rational& c0, const PrimeSetComplement& excluded) {
  if (c0 <= 0) throw Error(ErrorCode::InvalidArgument, "minimal period must be positive");
  PeriodCheck out;
  out.smallest_integer_period = c0.get_num();
  for (const auto& p : prime_divisors(out.smallest_integer_period)) {
    if (!excluded.is_excluded(p)) out.escaping_primes.push_back(p);
  }
  if (out.escaping_primes.empty()) {
    out.verdict = Verdict::NotObstructed;
    out.witness = out.smallest_integer_period;
  } else {
    out.verdict = Verdict::Obstructed;
  }
  return out;
}

namespace {

void require_q_in_prime_set(unsigned long q, const PrimeSetComplement& excluded) {
  for (const auto& p : prime_divisors(Integer(q))) {
    if (excluded.is_excluded(p)) {
      throw Error(ErrorCode::NotInPrimeSet,
                  "q = " + std::to_string(q) + " has the prime factor " + p.get_str() +
                      ", which divides R_2 of a polynomial in D");
    }
  }
}

}  // namespace

TopologicalReport obstruct_topological(const LinkFamilySpec& spec, unsigned long d, const PolySet& D,
                                       unsigned precision) {
  if (d != 2) {
    throw Error(ErrorCode::UnsupportedDegree, "only the double branched cover (d = 2) is supported");
  }
  TopologicalReport out;
  out.m = spec.m;
  out.q = spec.q();
  out.d = d;
  out.excluded = excluded_primes(D, d);
  require_q_in_prime_set(out.q, out.excluded);
  out.covering = covering_jump_function(spec, precision);
  out.period = minimal_period(out.covering);
  switch (out.period.kind) {
    case PeriodResult::Kind::ZeroFunction:
      out.verdict = Verdict::NotObstructed;
      out.reason = "the covering jump function vanishes; every positive number is a period";
      break;
    case PeriodResult::Kind::NumericUnknown:
      out.verdict = Verdict::Inconclusive;
      out.reason = "the minimal period could not be certified from interval positions";
      break;
    case PeriodResult::Kind::Exact:
      out.check = period_coprimality_check(out.period.c0, out.excluded);
      out.verdict = out.check->verdict;
      if (out.verdict == Verdict::Obstructed) {
        out.reason = "every integer period has a prime factor in P_2(D)";
      } else {
        out.reason = "integer period " + out.check->witness->get_str() + " has all prime factors outside P_2(D)";
      }
      break;
  }
  return out;
}

SurgeryModel build_surgery_model(const LinkFamilySpec& spec) {
  SurgeryModel out;
  out.q = spec.q();
  if (!is_prime(Integer(out.q))) {
    throw Error(ErrorCode::NotPrime, "q = 2m + 1 = " + std::to_string(out.q) + " is not prime");
  }
  out.n = out.q * out.q;
  out.core_polynomial = torus_knot_alexander(static_cast<long>(out.q), static_cast<long>(out.q - 1));
  out.h1_M = FiniteAbelianGroup::cyclic(static_cast<long>(out.n));
  out.h1_M0_order = r_d(spec.J0_alexander.poly(), 2);
  if (gcd(out.h1_M0_order, Integer(out.q)) != 1) {
    throw Error(ErrorCode::CoprimalityViolation, "|H_1(M_0)| = " + out.h1_M0_order.get_str() +
                                                     " is not coprime to q = " + std::to_string(out.q));
  }
  return out;
}

SmoothReport obstruct_smooth(const LinkFamilySpec& spec, const PolySet& D, const std::optional<DTable>& external) {
  SmoothReport out;
  if (!is_prime(Integer(spec.q()))) {
    throw Error(ErrorCode::NotPrime, "q = 2m + 1 = " + std::to_string(spec.q()) + " is not prime");
  }
  out.excluded = excluded_primes(D, 2);
  require_q_in_prime_set(spec.q(), out.excluded);
  out.model = build_surgery_model(spec);
  const long q = static_cast<long>(out.model.q);

  if (external) {
    if (!(external->group == out.model.h1_M)) {
      throw Error(ErrorCode::InvalidArgument, "the external d-bar table must be indexed by H_1(M) = Z_" +
                                                  std::to_string(out.model.n));
    }
    out.dbar_mode = "external";
    out.dbar_table = *external;
  } else if (spec.J.size() == 0) {
    out.dbar_mode = "computed";
    VSequence v = v_sequence_lspace(out.model.core_polynomial);
    DTable d = large_surgery_table(static_cast<long>(out.model.n), v);
    out.dbar_table = dbar(d);
    out.dbar_table->provenance = "computed: d-bar of " + std::to_string(out.model.n) + "-surgery on T(" +
                                 std::to_string(q) + "," + std::to_string(q - 1) + ") from its V-sequence";
  } else {
    out.dbar_mode = "unavailable";
  }

  std::map<Element, Rational> values;
  if (out.dbar_table) values = out.dbar_table->values;
  out.vanishing = dbar_vanishing_obstruction(out.model.h1_M, q, values);
  switch (out.vanishing.outcome) {
    case VanishingResult::Outcome::Obstructed:
      out.verdict = Verdict::Obstructed;
      out.reason = "every subgroup H with |H|^2 = |H_1(M)_q| carries a nonzero d-bar value";
      break;
    case VanishingResult::Outcome::Passes:
      out.verdict = Verdict::NotObstructed;
      out.reason = "d-bar vanishes on a square-root-order subgroup";
      break;
    case VanishingResult::Outcome::Inconclusive:
      out.verdict = Verdict::Inconclusive;
      out.reason = out.dbar_mode == "unavailable"
                       ? "d-bar of M is not computable here; supply an external table"
                       : "the d-bar table lacks values needed to decide";
      break;
  }
  return out;
}

}  // namespace conclab
