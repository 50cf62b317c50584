#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conclab/abgroup.hpp"
#include "conclab/dinv.hpp"
#include "conclab/polyalg.hpp"
#include "conclab/seifert.hpp"

namespace conclab {

enum class Verdict { Obstructed, NotObstructed, Inconclusive };

/// "OBSTRUCTED", "NOT_OBSTRUCTED", "INCONCLUSIVE".
std::string to_string(Verdict v);

/// The two-component link L(m, J): first component concordant to a knot
/// with Alexander polynomial J0, covering knot built from J.
struct LinkFamilySpec {
  unsigned long m = 1;
  SeifertMatrix J;
  AlexanderPolynomial J0_alexander = AlexanderPolynomial::unit();

  unsigned long q() const { return 2 * m + 1; }
};

/// delta_{J # J^r}(theta / q): jump function of J + J^T scaled by q = 2m + 1.
JumpFunction covering_jump_function(const LinkFamilySpec& spec, unsigned precision = kDefaultPrecision);

struct PeriodCheck {
  Verdict verdict = Verdict::Inconclusive;
  Integer smallest_integer_period;      // numerator of c0
  std::vector<Integer> escaping_primes; // primes of that period outside `excluded`
  std::optional<Integer> witness;       // an integer period with all primes excluded
};

/// Throws Error(InvalidArgument) unless c0 > 0.
PeriodCheck period_coprimality_check(const Rational& c0, const PrimeSetComplement& excluded);

struct TopologicalReport {
  Verdict verdict = Verdict::Inconclusive;
  unsigned long m = 0;
  unsigned long q = 0;
  unsigned long d = 2;
  JumpFunction covering;
  PeriodResult period;
  PrimeSetComplement excluded;
  std::optional<PeriodCheck> check;
  std::string reason;
};

/// Only d = 2 is supported (Error(UnsupportedDegree) otherwise). Rejects with
/// Error(NotInPrimeSet) when a prime factor of q is excluded by D.
TopologicalReport obstruct_topological(const LinkFamilySpec& spec, unsigned long d, const PolySet& D,
                                       unsigned precision = kDefaultPrecision);

/// M = q^2-surgery on T(q, q-1) # J # J^r, with M_0 the double branched
/// cover of J0.
struct SurgeryModel {
  unsigned long q = 0;
  unsigned long n = 0;
  AlexanderPolynomial core_polynomial = AlexanderPolynomial::unit();
  FiniteAbelianGroup h1_M;
  Integer h1_M0_order;
};

/// Throws Error(NotPrime) when q is not prime and Error(CoprimalityViolation)
/// when gcd(R_2(J0), q) != 1.
SurgeryModel build_surgery_model(const LinkFamilySpec& spec);

struct SmoothReport {
  Verdict verdict = Verdict::Inconclusive;
  SurgeryModel model;
  PrimeSetComplement excluded;
  std::string dbar_mode;          // "external", "computed" or "unavailable"
  std::optional<DTable> dbar_table;
  VanishingResult vanishing;
  std::string reason;
};

/// Smooth obstruction on H_1(M) = Z_{q^2}. Without an external table the dbar
/// values are computed only when J is empty, where M is surgery on an
/// L-space knot; otherwise the verdict is INCONCLUSIVE with the required
/// elements listed. Throws Error(NotInPrimeSet) when q is excluded by D.
SmoothReport obstruct_smooth(const LinkFamilySpec& spec, const PolySet& D, const std::optional<DTable>& external);

}  // namespace conclab
