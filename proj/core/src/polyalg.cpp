#include "conclab/polyalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "conclab/error.hpp"
#include "conclab/primes.hpp"

namespace conclab {

// ---- LaurentPoly ----------------------------------------------------------

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
  Terms t;
  if (c != 0) t.emplace(exponent, c);
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::from_coefficients(std::span<const Integer> coeffs, int offset) {
  Terms t;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) t.emplace(offset + static_cast<int>(i), coeffs[i]);
  }
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::from_upoly(const UPoly& p, int offset) {
  if (!p.has_integer_coefficients()) {
    throw Error(ErrorCode::InvalidArgument, "Laurent polynomials carry integer coefficients");
  }
  Terms t;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) t.emplace(offset + static_cast<int>(i), c[i].get_num());
  }
  return LaurentPoly(std::move(t));
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Integer LaurentPoly::eval_at_minus_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += (e % 2 == 0) ? c : Integer(-c);
  return s;
}

Rational LaurentPoly::eval(const Rational& t) const {
  if (t == 0 && !is_zero() && min_exponent() < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative powers evaluated at t = 0");
  }
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    Rational base = e >= 0 ? t : Rational(1) / t;
    for (int k = 0; k < std::abs(e); ++k) p *= base;
    s += Rational(c) * p;
  }
  return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e + k, c);
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::centered() const {
  if (is_zero()) return *this;
  const int target_min = -(span() / 2);
  return shifted(target_min - min_exponent());
}

bool LaurentPoly::is_centered() const {
  return is_zero() || min_exponent() == -(span() / 2);
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    if (coefficient(-e) != c) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::reversed() const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(-e, c);
  return LaurentPoly(std::move(t));
}

UPoly LaurentPoly::to_upoly() const {
  if (is_zero()) return {};
  const int lo = min_exponent();
  std::vector<Rational> c(static_cast<std::size_t>(span() + 1), Rational(0));
  for (const auto& [e, v] : terms_) c[static_cast<std::size_t>(e - lo)] = Rational(v);
  return UPoly(std::move(c));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  Terms t;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) t[e1 + e2] += c1 * c2;
  }
  *this = LaurentPoly(std::move(t));
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e, -c);
  return LaurentPoly(std::move(t));
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

// ---- Alexander polynomials ------------------------------------------------

namespace {

bool is_alexander_form(const LaurentPoly& p) {
  return !p.is_zero() && p.is_centered() && p.is_symmetric() && p.eval_at_one() == 1;
}

}  // namespace

AlexanderPolynomial::AlexanderPolynomial(LaurentPoly p) : poly_(std::move(p)) {
  if (!is_alexander_form(poly_)) {
    throw Error(ErrorCode::NotNormalized,
                "'" + to_string(poly_) + "' is not a centred symmetric polynomial with f(1) = 1");
  }
}

std::optional<AlexanderPolynomial> AlexanderPolynomial::try_from(const LaurentPoly& p) {
  if (!is_alexander_form(p)) return std::nullopt;
  return AlexanderPolynomial(p);
}

std::optional<AlexanderPolynomial> NormalizedPolynomial::alexander() const {
  if (!alexander_normalized) return std::nullopt;
  return AlexanderPolynomial(poly);
}

NormalizedPolynomial normalize_alexander(const LaurentPoly& raw) {
  NormalizedPolynomial out;
  out.poly = raw.centered();
  if (out.poly.is_zero() || !out.poly.is_symmetric()) return out;
  const Integer at_one = out.poly.eval_at_one();
  if (at_one == -1) {
    out.poly = -out.poly;
    out.unit_sign = -1;
  } else if (at_one != 1) {
    return out;
  }
  out.alexander_normalized = true;
  return out;
}

NormalizedPolynomial normalize_alexander(std::span<const Integer> coeffs, int offset) {
  if (coeffs.empty()) throw Error(ErrorCode::EmptyInput, "empty coefficient list");
  return normalize_alexander(LaurentPoly::from_coefficients(coeffs, offset));
}

// ---- resultants and branched-cover orders ---------------------------------

Integer resultant(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of a zero polynomial");
  Rational r = conclab::resultant(f.to_upoly(), g.to_upoly());
  return r.get_num();
}

Integer r_d(const LaurentPoly& f, unsigned long d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "R_d needs d >= 1");
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "R_d of the zero polynomial");
  // Exponents are read modulo d: f(w) only sees t^k through w^(k mod d).
  std::vector<Rational> folded(d, Rational(0));
  const Integer dd(d);
  for (const auto& [e, c] : f.terms()) {
    auto idx = mod_floor(Integer(e), dd).get_ui();
    folded[idx] += Rational(c);
  }
  UPoly reduced(std::move(folded));
  if (reduced.is_zero()) return 0;
  UPoly cyclic = UPoly::monomial(1, d) - UPoly::constant(1);
  Rational r = conclab::resultant(cyclic, reduced);
  return abs(r.get_num());
}

// ---- prime sets -----------------------------------------------------------

PolySet::PolySet(std::vector<AlexanderPolynomial> polys) : polys_(std::move(polys)) {
  if (polys_.empty()) throw Error(ErrorCode::EmptyInput, "a polynomial set must be non-empty");
}

bool PolySet::contains(const AlexanderPolynomial& f) const {
  return std::find(polys_.begin(), polys_.end(), f) != polys_.end();
}

bool PrimeSetComplement::is_excluded(const Integer& p) const {
  return std::binary_search(excluded.begin(), excluded.end(), p);
}

bool PrimeSetComplement::contains(const Integer& q) const { return is_prime(q) && !is_excluded(q); }

PrimeSetComplement excluded_primes(const PolySet& D, unsigned long d) {
  if (!as_prime_power(Integer(d))) {
    throw Error(ErrorCode::NotPrimePower, std::to_string(d) + " is not a prime power");
  }
  PrimeSetComplement out;
  out.d = d;
  for (const auto& f : D.polys()) {
    Integer order = r_d(f.poly(), d);
    if (order <= 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "R_d vanished for a prime-power d; '" + to_string(f.poly()) + "' is not an Alexander polynomial");
    }
    out.orders.push_back(order);
    for (auto& p : prime_divisors(order)) out.excluded.push_back(std::move(p));
  }
  std::sort(out.excluded.begin(), out.excluded.end());
  out.excluded.erase(std::unique(out.excluded.begin(), out.excluded.end()), out.excluded.end());
  return out;
}

// ---- torus knots and torsion coefficients ---------------------------------

AlexanderPolynomial torus_knot_alexander(long a, long b) {
  if (a < 2 || b < 2) throw Error(ErrorCode::InvalidArgument, "torus knot parameters must be >= 2");
  if (std::gcd(a, b) != 1) {
    throw Error(ErrorCode::NotCoprime, "T(" + std::to_string(a) + "," + std::to_string(b) + ") needs coprime parameters");
  }
  auto ua = static_cast<std::size_t>(a);
  auto ub = static_cast<std::size_t>(b);
  const UPoly one = UPoly::constant(1);
  UPoly num = (UPoly::monomial(1, ua * ub) - one) * (UPoly::x() - one);
  UPoly den = (UPoly::monomial(1, ua) - one) * (UPoly::monomial(1, ub) - one);
  auto [q, r] = num.divmod(den);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "torus knot division left a remainder");
  return AlexanderPolynomial(LaurentPoly::from_upoly(q).centered());
}

std::vector<Integer> torsion_coefficients(const AlexanderPolynomial& f) {
  const int g = f.degree();
  std::vector<Integer> t;
  for (int i = 0; i < g; ++i) {
    Integer s = 0;
    for (int j = 1; i + j <= g; ++j) s += Integer(j) * f.poly().coefficient(i + j);
    t.push_back(s);
  }
  while (!t.empty() && t.back() == 0) t.pop_back();
  return t;
}

}  // namespace conclab
