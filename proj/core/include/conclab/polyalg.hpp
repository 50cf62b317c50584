#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "conclab/numeric.hpp"
#include "conclab/upoly.hpp"

namespace conclab {

/// Integer Laurent polynomial sum a_k t^k. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);

  static LaurentPoly constant(const Integer& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Integer& c, int exponent);
  /// coeffs[i] is the coefficient of t^(offset + i).
  static LaurentPoly from_coefficients(std::span<const Integer> coeffs, int offset = 0);
  /// Throws Error(InvalidArgument) unless every coefficient of p is an integer.
  static LaurentPoly from_upoly(const UPoly& p, int offset = 0);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  int span() const { return max_exponent() - min_exponent(); }
  Integer coefficient(int exponent) const;

  Integer eval_at_one() const;
  Integer eval_at_minus_one() const;
  Rational eval(const Rational& t) const;

  /// Multiplication by t^k.
  LaurentPoly shifted(int k) const;
  /// Shift placing the exponents symmetrically about 0 (about 1/2 when the
  /// span is odd, with the extra exponent on the positive side).
  LaurentPoly centered() const;
  bool is_centered() const;
  /// a_k == a_{-k} for every k.
  bool is_symmetric() const;
  /// f(t^{-1}).
  LaurentPoly reversed() const;
  /// The ordinary polynomial t^{-min} f.
  UPoly to_upoly() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

/// Human form, descending exponents: "t - 1 + t^-1".
std::string to_string(const LaurentPoly& f);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

/// A centred, symmetric Laurent polynomial with f(1) = 1: the normal form of
/// a classical Alexander polynomial after fixing the unit +-t^k.
class AlexanderPolynomial {
 public:
  /// Throws Error(NotNormalized) if p is not centred, symmetric, with p(1) = 1.
  explicit AlexanderPolynomial(LaurentPoly p);
  static std::optional<AlexanderPolynomial> try_from(const LaurentPoly& p);
  static AlexanderPolynomial unit() { return AlexanderPolynomial(LaurentPoly::constant(1)); }

  const LaurentPoly& poly() const noexcept { return poly_; }
  /// Top exponent; equals the genus for an Alexander polynomial of a genus-
  /// minimizing Seifert surface, and is a lower bound in general.
  int degree() const { return poly_.is_zero() ? 0 : poly_.max_exponent(); }

  friend bool operator==(const AlexanderPolynomial&, const AlexanderPolynomial&) = default;

 private:
  LaurentPoly poly_;
};

struct NormalizedPolynomial {
  LaurentPoly poly;                  // centred and zero-trimmed
  bool alexander_normalized = false; // symmetric with f(1) = +1 after the sign fix
  int unit_sign = 1;                 // -1 when the input had f(1) = -1 and was negated

  std::optional<AlexanderPolynomial> alexander() const;
};

/// Throws Error(EmptyInput) for an empty coefficient list.
NormalizedPolynomial normalize_alexander(std::span<const Integer> coeffs, int offset = 0);
NormalizedPolynomial normalize_alexander(const LaurentPoly& raw);

/// Res of the shifted ordinary representatives t^{-min f} f and t^{-min g} g.
/// Throws Error(ZeroPolynomial) on a zero argument.
Integer resultant(const LaurentPoly& f, const LaurentPoly& g);

/// |prod f(w)| over the d-th roots of unity w, computed as |Res(t^d - 1, f)|.
/// Zero is a legitimate value (cyclotomic factors of non-prime-power d).
Integer r_d(const LaurentPoly& f, unsigned long d);

/// Non-empty finite collection of Alexander polynomials.
class PolySet {
 public:
  explicit PolySet(std::vector<AlexanderPolynomial> polys);
  static PolySet unit() { return PolySet({AlexanderPolynomial::unit()}); }

  const std::vector<AlexanderPolynomial>& polys() const noexcept { return polys_; }
  bool contains(const AlexanderPolynomial& f) const;

 private:
  std::vector<AlexanderPolynomial> polys_;
};

/// P_d(D) stored through its finite complement: `excluded` is the sorted set
/// of primes dividing some R_d(f_i).
struct PrimeSetComplement {
  unsigned long d = 1;
  std::vector<Integer> orders;    // R_d(f_i), aligned with the PolySet
  std::vector<Integer> excluded;  // sorted, duplicate-free

  /// q is in P_d(D): q prime and not excluded.
  bool contains(const Integer& q) const;
  bool is_excluded(const Integer& p) const;
};

/// Throws Error(NotPrimePower) unless d is a prime power.
PrimeSetComplement excluded_primes(const PolySet& D, unsigned long d);

/// (t^{ab}-1)(t-1)/((t^a-1)(t^b-1)), centred. Throws Error(NotCoprime) when
/// gcd(a, b) != 1 and Error(InvalidArgument) when a or b is below 2.
AlexanderPolynomial torus_knot_alexander(long a, long b);

/// t_i = sum_{j>=1} j a_{i+j} for i >= 0, trailing zeros trimmed.
std::vector<Integer> torsion_coefficients(const AlexanderPolynomial& f);

}  // namespace conclab
