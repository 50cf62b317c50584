#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conclab/abgroup.hpp"
#include "conclab/numeric.hpp"
#include "conclab/polyalg.hpp"

namespace conclab {

/// Correction term of the lens space L(p, q) at label i in [0, p), by the
/// Euclidean recursion with d(S^3) = 0. `reversed` negates the value
/// (opposite orientation). Throws Error(NotCoprime) or Error(InvalidArgument).
Rational d_lens(long p, long q, long i, bool reversed = false);

/// ((2i - p)^2 - p) / (4p), the closed form for L(p, 1).
Rational d_lens_p1(long p, long i);

/// Nonincreasing, nonnegative, steps of 0 or 1, last entry 0.
class VSequence {
 public:
  /// Throws Error(InvalidVSequence) when the invariants fail.
  explicit VSequence(std::vector<long> values);
  static VSequence zero() { return VSequence({0}); }

  const std::vector<long>& values() const noexcept { return values_; }
  long at(std::size_t i) const { return i < values_.size() ? values_[i] : 0; }
  /// Index of the first zero; a genus bound for the knot.
  std::size_t genus() const;

  friend bool operator==(const VSequence&, const VSequence&) = default;

 private:
  std::vector<long> values_;
};

/// Nonzero coefficients are +-1, alternate in sign, and the top one is +1.
bool is_lspace_knot_polynomial(const AlexanderPolynomial& f);

/// V_i = t_i for an L-space knot. Throws Error(NotLSpaceKnotPolynomial).
VSequence v_sequence_lspace(const AlexanderPolynomial& f);

/// d(S^3_n(K), i) = d(L(n,1), i) - 2 V_{min(i, n-i)} for i in [0, n). The
/// spin structure is label 0. Throws Error(SurgeryCoefficientTooSmall) when
/// n < max(1, 2g - 1).
Rational d_large_surgery(long n, const VSequence& v, long i);

/// Table of correction terms keyed by group elements. May be partial when it
/// carries external data.
struct DTable {
  FiniteAbelianGroup group;
  std::map<Element, Rational> values;
  std::string provenance;

  bool is_complete() const;
  std::optional<Rational> at(const Element& e) const;
};

/// Full table of d_large_surgery over Z_n.
DTable large_surgery_table(long n, const VSequence& v);

/// d(s) - d(0). Throws Error(InvalidArgument) without a basepoint value.
DTable dbar(const DTable& t);

struct VanishingResult {
  enum class Outcome { Passes, Obstructed, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  bool order_is_square = false;
  std::vector<Subgroup> candidates;
  std::optional<Subgroup> witness;                     // a candidate with dbar = 0 throughout
  std::vector<std::pair<std::size_t, Element>> failures; // candidate index, element with dbar != 0
  std::vector<Element> missing;                        // values needed to decide
};

std::string to_string(VanishingResult::Outcome o);

/// Decides whether some square-root-order subgroup of G_q carries vanishing
/// dbar. The map may be partial.
VanishingResult dbar_vanishing_obstruction(const FiniteAbelianGroup& g, long q,
                                           const std::map<Element, Rational>& dbar_values);

}  // namespace conclab
