#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "conclab/numeric.hpp"

namespace conclab {

/// Dense univariate polynomial with rational coefficients, c[i] * x^i.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has an empty vector and degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, std::size_t exponent);
  static UPoly x() { return monomial(1, 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  UPoly derivative() const;
  UPoly monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  UPoly primitive() const;
  bool has_integer_coefficients() const;

  /// Quotient and remainder; throws on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  bool divisible_by(const UPoly& divisor) const { return divmod(divisor).second.is_zero(); }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& s);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
  UPoly operator-() const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero when both inputs are zero).
UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);

/// Res(a, b) by the Euclidean recurrence over Q.
Rational resultant(const UPoly& a, const UPoly& b);

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Sturm sequence of a polynomial; counts distinct real roots.
class SturmChain {
 public:
  explicit SturmChain(const UPoly& p);

  int variations(const Rational& x) const;
  /// Distinct roots in (a, b]; exact count when neither endpoint is a root.
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  std::vector<UPoly> chain_;
};

/// Open interval (lo, hi) holding exactly one real root of a square-free
/// polynomial; neither endpoint is a root.
struct RootInterval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

/// Upper bound on the absolute value of every root (Cauchy).
Rational root_bound(const UPoly& p);

/// Isolates every real root of `squarefree` in the open interval (lo, hi),
/// ascending. lo and hi must not be roots.
std::vector<RootInterval> isolate_real_roots(const UPoly& squarefree, const Rational& lo,
                                             const Rational& hi);

/// Halves the width of an isolating interval.
RootInterval bisect(const UPoly& squarefree, const RootInterval& iv);

}  // namespace conclab
