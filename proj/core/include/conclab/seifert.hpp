#pragma once

#include <string>
#include <vector>

#include "conclab/matrix.hpp"
#include "conclab/numeric.hpp"
#include "conclab/polyalg.hpp"

namespace conclab {

inline constexpr unsigned kDefaultPrecision = 128;

/// Square rational matrix presenting a (possibly generalized) Seifert form.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  /// Throws Error(InvalidArgument) unless m is square.
  explicit SeifertMatrix(RationalMatrix m, std::string label = {});

  const RationalMatrix& matrix() const noexcept { return m_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return m_.rows(); }
  /// Integer entries and det(A - A^T) = +-1.
  bool is_knot_matrix() const;

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.m_ == b.m_; }

 private:
  RationalMatrix m_;
  std::string label_;
};

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);
SeifertMatrix reverse(const SeifertMatrix& a);
SeifertMatrix mirror(const SeifertMatrix& a);

/// det(t^{1/2} A - t^{-1/2} A^T), centred. Rational matrices are cleared of
/// denominators by a positive integer factor. The zero polynomial is returned
/// when the form is degenerate everywhere.
LaurentPoly alexander_from_seifert(const SeifertMatrix& a);

/// A point of the circle parameter: exact when lo == hi, otherwise a
/// certified open enclosure (lo, hi).
struct Position {
  Rational lo;
  Rational hi;

  static Position exact_at(const Rational& r) { return {r, r}; }
  bool is_exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  friend bool operator==(const Position&, const Position&) = default;
};

/// Every t in (0, 1) where the form (1 - w)A + (1 - conj w)A^T degenerates,
/// w = exp(2 pi i t), ascending. Throws Error(DegenerateForm) when
/// det(tA - A^T) vanishes identically.
std::vector<Position> jump_locations(const SeifertMatrix& a, unsigned precision = kDefaultPrecision);

/// Signature of (1 - w)A + (1 - conj w)A^T at w = exp(2 pi i t), t in (0, 1).
/// Throws Error(EvaluationAtJumpPoint) when the form is singular there.
int signature_at(const SeifertMatrix& a, const Rational& t, unsigned precision = kDefaultPrecision);

struct Jump {
  Position position;
  long value = 0;
  friend bool operator==(const Jump&, const Jump&) = default;
};

struct JumpFunction {
  Rational ambient_period = 1;
  std::vector<Jump> jumps;  // ascending by position
  bool exact = true;        // every position is an exact rational
  unsigned precision = kDefaultPrecision;

  bool is_zero() const noexcept { return jumps.empty(); }
  friend bool operator==(const JumpFunction& a, const JumpFunction& b) {
    return a.ambient_period == b.ambient_period && a.jumps == b.jumps && a.exact == b.exact;
  }
};

/// Jumps sigma(t+) - sigma(t-) at each degeneracy point, positions scaled
/// by c so the ambient period is c. Zero jumps are dropped.
JumpFunction jump_function(const SeifertMatrix& a, unsigned long c = 1,
                           unsigned precision = kDefaultPrecision);

/// theta -> theta / q: positions and ambient period multiplied by q.
JumpFunction scale_jump_function(const JumpFunction& f, unsigned long q);

/// Pointwise sum. Throws Error(InvalidArgument) on differing ambient periods.
JumpFunction add_jump_functions(const JumpFunction& a, const JumpFunction& b);

/// Odd values, values summing to a nonzero total, unsorted positions.
/// Empty when the function satisfies its invariants.
std::vector<std::string> invariant_violations(const JumpFunction& f);

struct PeriodResult {
  enum class Kind { Exact, ZeroFunction, NumericUnknown };
  Kind kind = Kind::ZeroFunction;
  Rational c0 = 0;  // the minimal period; for NumericUnknown the best estimate
};

std::string to_string(PeriodResult::Kind k);

/// Minimal period of a jump function, as a divisor of its ambient period.
PeriodResult minimal_period(const JumpFunction& f);

}  // namespace conclab
