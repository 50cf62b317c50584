#include "conclab/parse.hpp"

#include <cctype>
#include <string>

#include "conclab/error.hpp"

namespace conclab {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) != 0 || s_[end] == '-')) return false;
    pos_ = end;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  long small_int() {
    bool neg = accept('-');
    std::string d = digits();
    if (d.size() > 6) fail("number too large");
    long v = std::stol(d);
    return neg ? -v : v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

LaurentPoly power(const LaurentPoly& base, long e, Cursor& c) {
  if (e < 0) {
    if (base.terms().size() != 1 || (base.terms().begin()->second != 1 && base.terms().begin()->second != -1)) {
      c.fail("negative powers apply only to +-t^k");
    }
    const auto& [k, coef] = *base.terms().begin();
    Integer sign = (-e) % 2 == 0 ? Integer(1) : coef;
    return LaurentPoly::monomial(sign, static_cast<int>(k * e));
  }
  LaurentPoly out = LaurentPoly::constant(1);
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

LaurentPoly parse_sum(Cursor& c);

LaurentPoly parse_primary(Cursor& c) {
  char ch = c.peek();
  if (ch == '(') {
    c.expect('(');
    LaurentPoly inner = parse_sum(c);
    c.expect(')');
    return inner;
  }
  if (ch == 't') {
    c.accept(ch);
    return LaurentPoly::monomial(1, 1);
  }
  if (std::isdigit(static_cast<unsigned char>(ch)) != 0) return LaurentPoly::constant(Integer(c.digits()));
  c.fail(ch == '\0' ? "unexpected end of input" : std::string("unexpected '") + ch + "'");
}

LaurentPoly parse_factor(Cursor& c) {
  LaurentPoly base = parse_primary(c);
  if (c.accept('^')) {
    bool paren = c.accept('(');
    long e = c.small_int();
    if (paren) c.expect(')');
    return power(base, e, c);
  }
  return base;
}

LaurentPoly parse_product(Cursor& c) {
  LaurentPoly out = parse_factor(c);
  for (;;) {
    if (c.accept('*')) {
      out *= parse_factor(c);
      continue;
    }
    char ch = c.peek();
    if (ch == '(' || ch == 't' || std::isdigit(static_cast<unsigned char>(ch)) != 0) {
      out *= parse_factor(c);
      continue;
    }
    return out;
  }
}

LaurentPoly parse_sum(Cursor& c) {
  LaurentPoly out;
  bool first = true;
  for (;;) {
    bool neg = false;
    if (c.accept('-')) {
      neg = true;
    } else if (!c.accept('+') && !first) {
      return out;
    }
    LaurentPoly term = parse_product(c);
    out += neg ? -term : term;
    first = false;
  }
}

bool equals_ignoring_case(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

SeifertMatrix named_knot(Cursor& c) {
  if (c.accept_word("unknot")) return SeifertMatrix(RationalMatrix(0, 0), "unknot");
  if (c.accept_word("trefoil")) return SeifertMatrix(RationalMatrix{{-1, 1}, {0, -1}}, "trefoil");
  if (c.accept_word("figure-eight")) return SeifertMatrix(RationalMatrix{{-1, 1}, {0, 1}}, "figure-eight");
  c.fail("unknown knot name");
}

SeifertMatrix parse_knot_sum(Cursor& c);

SeifertMatrix parse_knot_atom(Cursor& c) {
  if (c.accept('(')) {
    SeifertMatrix k = parse_knot_sum(c);
    c.expect(')');
    return k;
  }
  if (c.accept_word("reverse")) {
    c.expect('(');
    SeifertMatrix k = parse_knot_sum(c);
    c.expect(')');
    return reverse(k);
  }
  if (c.accept_word("mirror")) {
    c.expect('(');
    SeifertMatrix k = parse_knot_sum(c);
    c.expect(')');
    return mirror(k);
  }
  return named_knot(c);
}

SeifertMatrix parse_knot_sum(Cursor& c) {
  SeifertMatrix out = parse_knot_atom(c);
  while (c.accept('#')) out = connected_sum(out, parse_knot_atom(c));
  return out;
}

}  // namespace

LaurentPoly parse_polynomial(std::string_view text) {
  Cursor c(text);
  if (c.at_end()) throw Error(ErrorCode::Parse, "empty polynomial expression");
  LaurentPoly out = parse_sum(c);
  if (!c.at_end()) c.fail("trailing input");
  return out;
}

LaurentPoly resolve_polynomial(std::string_view text) {
  std::string_view s = trim(text);
  if (equals_ignoring_case(s, "unknot") || equals_ignoring_case(s, "unit")) return LaurentPoly::constant(1);
  if (equals_ignoring_case(s, "trefoil")) return torus_knot_alexander(2, 3).poly();
  if (equals_ignoring_case(s, "figure-eight")) return alexander_from_seifert(parse_knot("figure-eight"));
  if (s.size() > 2 && s[0] == 'T' && trim(s.substr(1)).front() == '(') {
    Cursor c(s.substr(1));
    c.expect('(');
    long a = c.small_int();
    c.expect(',');
    long b = c.small_int();
    c.expect(')');
    if (!c.at_end()) c.fail("trailing input");
    return torus_knot_alexander(a, b).poly();
  }
  return parse_polynomial(s);
}

SeifertMatrix parse_knot(std::string_view text) {
  Cursor c(text);
  SeifertMatrix out = parse_knot_sum(c);
  if (!c.at_end()) c.fail("trailing input");
  if (out.label().empty()) return out;
  return SeifertMatrix(out.matrix(), std::string(trim(text)));
}

PolySet parse_polyset(std::string_view text) {
  std::string_view s = trim(text);
  if (equals_ignoring_case(s, "unit") || equals_ignoring_case(s, "{1}")) return PolySet::unit();
  std::vector<AlexanderPolynomial> polys;
  while (!s.empty()) {
    std::size_t cut = s.find(';');
    std::string_view item = trim(s.substr(0, cut));
    if (item.empty()) throw Error(ErrorCode::Parse, "empty entry in polynomial set");
    NormalizedPolynomial n = normalize_alexander(resolve_polynomial(item));
    auto a = n.alexander();
    if (!a) throw Error(ErrorCode::NotNormalized, "'" + std::string(item) + "' is not an Alexander polynomial");
    polys.push_back(*a);
    if (cut == std::string_view::npos) break;
    s = s.substr(cut + 1);
  }
  return PolySet(std::move(polys));
}

}  // namespace conclab
