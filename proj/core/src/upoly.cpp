#include "conclab/upoly.hpp"

#include <algorithm>
#include <cstdlib>

#include "conclab/error.hpp"

namespace conclab {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, std::size_t exponent) {
  std::vector<Rational> v(exponent + 1, Rational(0));
  v[exponent] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly r = *this;
  Rational inv = 1 / leading();
  return r *= inv;
}

bool UPoly::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.get_den() == 1; });
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& c : c_) den = lcm(den, c.get_den());
  std::vector<Integer> ints;
  ints.reserve(c_.size());
  Integer content = 0;
  for (const auto& c : c_) {
    Integer v = c.get_num() * (den / c.get_den());
    content = gcd(content, v);
    ints.push_back(v);
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(Integer(v / content));
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial division by zero");
  if (degree() < divisor.degree()) return {UPoly{}, *this};
  std::vector<Rational> rem = c_;
  const int dd = divisor.degree();
  std::vector<Rational> quot(c_.size() - divisor.c_.size() + 1, Rational(0));
  const Rational& lead = divisor.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  return r *= Rational(-1);
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = r.is_zero() ? UPoly{} : r.primitive();
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  UPoly g = gcd(p, p.derivative());
  return p.divmod(g).first.primitive();
}

Rational resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree();
  const int n = b.degree();
  if (n == 0) {
    Rational r = 1;
    for (int i = 0; i < m; ++i) r *= b.leading();
    return r;
  }
  if (m == 0) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= a.leading();
    return r;
  }
  UPoly rem = a.divmod(b).second;
  if (rem.is_zero()) return 0;
  Rational factor = ((m * n) % 2 == 0) ? Rational(1) : Rational(-1);
  for (int i = 0; i < m - rem.degree(); ++i) factor *= b.leading();
  return factor * resultant(b, rem);
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  UPoly result;
  UPoly basis = UPoly::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    result += basis * dd[i];
    basis *= UPoly(std::vector<Rational>{-xs[i], Rational(1)});
  }
  return result;
}

SturmChain::SturmChain(const UPoly& p) {
  if (p.is_zero()) return;
  chain_.push_back(p.primitive());
  UPoly d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d.primitive());
  while (true) {
    UPoly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps every sign while bounding coefficient growth.
    UPoly s = -r;
    chain_.push_back(s.primitive() * Rational(sgn(s.leading())));
  }
}

int SturmChain::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational root_bound(const UPoly& p) {
  if (p.degree() <= 0) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational q = abs(p.coefficient(static_cast<std::size_t>(i)) / p.leading());
    if (q > m) m = q;
  }
  return m + 1;
}

namespace {

// A split point strictly inside (lo, hi) that is not a root.
Rational split_point(const UPoly& p, const Rational& lo, const Rational& hi) {
  const Rational w = hi - lo;
  for (long den = 2;; ++den) {
    for (long num = 1; num < den; ++num) {
      Rational m = lo + w * Rational(num, den);
      m.canonicalize();
      if (p.sign_at(m) != 0) return m;
    }
  }
}

void isolate(const UPoly& p, const SturmChain& sturm, const Rational& lo, const Rational& hi,
             int roots, std::vector<RootInterval>& out) {
  if (roots == 0) return;
  if (roots == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = split_point(p, lo, hi);
  int left = sturm.count(lo, mid);
  isolate(p, sturm, lo, mid, left, out);
  isolate(p, sturm, mid, hi, roots - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UPoly& squarefree, const Rational& lo,
                                             const Rational& hi) {
  std::vector<RootInterval> out;
  if (squarefree.degree() <= 0 || !(lo < hi)) return out;
  if (squarefree.sign_at(lo) == 0 || squarefree.sign_at(hi) == 0) {
    throw Error(ErrorCode::InvalidArgument, "root isolation endpoints must not be roots");
  }
  SturmChain sturm(squarefree);
  isolate(squarefree, sturm, lo, hi, sturm.count(lo, hi), out);
  return out;
}

RootInterval bisect(const UPoly& squarefree, const RootInterval& iv) {
  Rational mid = (iv.lo + iv.hi) / 2;
  int s_mid = squarefree.sign_at(mid);
  if (s_mid == 0) return {(iv.lo + mid) / 2, (mid + iv.hi) / 2};
  int s_lo = squarefree.sign_at(iv.lo);
  if (s_lo != s_mid) return {iv.lo, mid};
  return {mid, iv.hi};
}

}  // namespace conclab
