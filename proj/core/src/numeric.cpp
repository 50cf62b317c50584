#include "conclab/numeric.hpp"

#include <cctype>

#include "conclab/error.hpp"

namespace conclab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "empty-input";
    case ErrorCode::ZeroPolynomial: return "zero-polynomial";
    case ErrorCode::NotPrimePower: return "not-prime-power";
    case ErrorCode::NotPrime: return "not-prime";
    case ErrorCode::NotCoprime: return "not-coprime";
    case ErrorCode::NotNormalized: return "not-alexander-normalized";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::EvaluationAtJumpPoint: return "evaluation-at-jump-point";
    case ErrorCode::DegenerateForm: return "degenerate-form";
    case ErrorCode::SizeBoundExceeded: return "size-bound-exceeded";
    case ErrorCode::FactoringScope: return "factoring-scope";
    case ErrorCode::NotLSpaceKnotPolynomial: return "not-an-lspace-knot-polynomial";
    case ErrorCode::InvalidVSequence: return "invalid-v-sequence";
    case ErrorCode::SurgeryCoefficientTooSmall: return "surgery-coefficient-too-small";
    case ErrorCode::UnsupportedDegree: return "unsupported-degree";
    case ErrorCode::CoprimalityViolation: return "coprimality-violation";
    case ErrorCode::NotInPrimeSet: return "not-in-prime-set";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!valid_integer_text(text)) {
    throw Error(ErrorCode::Parse, "malformed integer '" + std::string(text) + "'");
  }
  return Integer(strip_plus(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!den.empty() && (den[0] == '-' || den[0] == '+')) {
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  }
  Integer n = parse_integer(num);
  Integer d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  return make_rational(n, d);
}

bool is_integer(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_den() == 1;
}

std::optional<std::int64_t> to_int64(const Integer& z) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!mpz_fits_slong_p(z.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t()));
}

std::optional<std::uint64_t> to_uint64(const Integer& z) {
  if (z < 0 || !mpz_fits_ulong_p(z.get_mpz_t())) return std::nullopt;
  return static_cast<std::uint64_t>(mpz_get_ui(z.get_mpz_t()));
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

int sign(const Rational& r) { return sgn(r); }
int sign(const Integer& z) { return sgn(z); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rational mod_rational(const Rational& r, const Rational& period) {
  Rational ratio = r / period;
  Integer fl = floor_div(ratio.get_num(), ratio.get_den());
  Rational out = r - period * Rational(fl);
  out.canonicalize();
  return out;
}

}  // namespace conclab
