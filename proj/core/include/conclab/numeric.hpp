#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace conclab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p/q" with q > 0 and gcd(p, q) = 1, or "p" when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws
/// Error(Parse) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r);

/// Narrowing helpers; nullopt when the value does not fit.
std::optional<std::int64_t> to_int64(const Integer& z);
std::optional<std::uint64_t> to_uint64(const Integer& z);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exponent);
int sign(const Rational& r);
int sign(const Integer& z);

/// Floor of a/b for b > 0, and the matching non-negative remainder.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

/// r - P*floor(r/P): the representative of r in [0, P).
Rational mod_rational(const Rational& r, const Rational& period);

}  // namespace conclab
