#include "conclab/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "conclab/error.hpp"
#include "conclab/primes.hpp"
#include "interval.hpp"

namespace conclab {

SeifertMatrix::SeifertMatrix(RationalMatrix m, std::string label) : m_(std::move(m)), label_(std::move(label)) {
  if (!m_.is_square()) throw Error(ErrorCode::InvalidArgument, "a Seifert matrix must be square");
}

bool SeifertMatrix::is_knot_matrix() const {
  if (!m_.is_integral()) return false;
  Rational d = determinant(m_ - m_.transpose());
  return d == 1 || d == -1;
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  std::string label;
  if (!a.label().empty() || !b.label().empty()) label = a.label() + " # " + b.label();
  return SeifertMatrix(RationalMatrix::block_diagonal(a.matrix(), b.matrix()), label);
}

SeifertMatrix reverse(const SeifertMatrix& a) {
  return SeifertMatrix(a.matrix().transpose(), a.label().empty() ? "" : "reverse(" + a.label() + ")");
}

SeifertMatrix mirror(const SeifertMatrix& a) {
  return SeifertMatrix(-a.matrix(), a.label().empty() ? "" : "mirror(" + a.label() + ")");
}

namespace {

UPoly seifert_determinant(const SeifertMatrix& a) {
  if (a.size() == 0) return UPoly::constant(1);
  return pencil_determinant(a.matrix(), a.matrix().transpose());
}

}  // namespace

LaurentPoly alexander_from_seifert(const SeifertMatrix& a) {
  UPoly f = seifert_determinant(a);
  if (f.is_zero()) return {};
  Integer den = 1;
  for (const auto& c : f.coefficients()) den = lcm(den, c.get_den());
  return LaurentPoly::from_upoly(f * Rational(den)).centered();
}

namespace {

unsigned long euler_phi(unsigned long k) {
  unsigned long phi = k;
  for (const auto& pp : factorize(Integer(k))) {
    unsigned long p = pp.prime.get_ui();
    phi = phi / p * (p - 1);
  }
  return phi;
}

UPoly cyclotomic(unsigned long k) {
  // Phi_k = prod_{d | k} (t^d - 1)^{mu(k/d)}.
  UPoly num = UPoly::constant(1);
  UPoly den = UPoly::constant(1);
  for (unsigned long d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    unsigned long m = k / d;
    int mu = 1;
    for (const auto& pp : factorize(Integer(m))) {
      if (pp.exponent > 1) {
        mu = 0;
        break;
      }
      mu = -mu;
    }
    if (mu == 0) continue;
    UPoly f = UPoly::monomial(1, d) - UPoly::constant(1);
    (mu > 0 ? num : den) *= f;
  }
  return num.divmod(den).first;
}

/// p(t) = t^m q(t + 1/t) for palindromic p of degree 2m.
UPoly palindromic_to_x(const UPoly& p) {
  const int m = p.degree() / 2;
  UPoly out = UPoly::constant(p.coefficient(static_cast<std::size_t>(m)));
  UPoly prev = UPoly::constant(2);
  UPoly cur = UPoly::x();
  for (int i = 1; i <= m; ++i) {
    out += cur * p.coefficient(static_cast<std::size_t>(m + i));
    UPoly next = UPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

struct CircleRoot {
  RootInterval x;            // isolating interval for x = 2cos(2 pi t)
  unsigned long k = 0;       // cyclotomic order, 0 when not cyclotomic
  unsigned long j = 0;       // t = j/k when cyclotomic
  long jump = 0;             // sigma(t+) - sigma(t-) at the t in (0, 1/2)
};

struct CircleAnalysis {
  bool root_at_half = false;
  UPoly product;                 // square-free, roots are the x-values below
  std::vector<CircleRoot> roots; // ascending in x, so descending in t
  std::vector<int> gap_signature; // gap_signature[i] holds between roots i-1 and i
  std::vector<Rational> gap_point;
};

int signature_at_x(const RationalMatrix& a, const Rational& x) {
  const std::size_t n = a.rows();
  if (n == 0) return 0;
  RationalMatrix s = a + a.transpose();
  if (x == -2) return inertia(s).signature();
  RationalMatrix k = a - a.transpose();
  const Rational u = (2 + x) / (2 - x);
  RationalMatrix big(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      big(i, j) = s(i, j);
      big(n + i, n + j) = u * s(i, j);
      big(i, n + j) = u * k(i, j);
      big(n + i, j) = -u * k(i, j);
    }
  }
  Inertia in = inertia(big);
  if (in.zero != 0) throw Error(ErrorCode::EvaluationAtJumpPoint, "form is singular at the sample point");
  int sig = in.signature();
  if (sig % 2 != 0) throw Error(ErrorCode::InvalidArgument, "realified signature is odd");
  return sig / 2;
}

CircleAnalysis analyze(const SeifertMatrix& a) {
  CircleAnalysis out;
  UPoly f = seifert_determinant(a);
  if (f.is_zero()) throw Error(ErrorCode::DegenerateForm, "det(tA - A^T) vanishes identically");
  // Strip powers of t.
  {
    std::size_t low = 0;
    while (f.coefficient(low) == 0) ++low;
    std::vector<Rational> c(f.coefficients().begin() + static_cast<long>(low), f.coefficients().end());
    f = UPoly(std::move(c)).primitive();
  }

  std::vector<unsigned long> cyclo;
  const int deg = f.degree();
  const unsigned long k_max = 2UL * static_cast<unsigned long>(deg) * static_cast<unsigned long>(deg) + 2;
  for (unsigned long k = 1; k <= k_max && f.degree() > 0; ++k) {
    if (euler_phi(k) > static_cast<unsigned long>(f.degree())) continue;
    UPoly phi = cyclotomic(k);
    bool hit = false;
    while (f.degree() > 0) {
      auto [q, r] = f.divmod(phi);
      if (!r.is_zero()) break;
      f = q;
      hit = true;
    }
    if (!hit) continue;
    if (k == 2) out.root_at_half = true;
    if (k >= 3) cyclo.push_back(k);
  }

  std::map<unsigned long, UPoly> psi;
  UPoly product = UPoly::constant(1);
  for (unsigned long k : cyclo) {
    psi.emplace(k, palindromic_to_x(cyclotomic(k)).primitive());
    product *= psi.at(k);
  }
  if (f.degree() > 0) product *= squarefree_part(palindromic_to_x(f.primitive())).primitive();
  out.product = product.primitive();

  std::vector<RootInterval> isolated = isolate_real_roots(out.product, Rational(-2), Rational(2));
  std::map<unsigned long, SturmChain> chains;
  for (const auto& [k, p] : psi) chains.emplace(k, SturmChain(p));
  for (auto& iv : isolated) {
    while (iv.lo <= -2 || iv.hi >= 2) iv = bisect(out.product, iv);
    CircleRoot root{iv};
    for (const auto& [k, chain] : chains) {
      if (chain.count(iv.lo, iv.hi) != 1) continue;
      // Roots of Psi_k ascend in x as j descends.
      int below = chain.count(Rational(-2), iv.lo);
      std::vector<unsigned long> js;
      for (unsigned long j = 1; 2 * j < k; ++j)
        if (std::gcd(j, k) == 1) js.push_back(j);
      root.k = k;
      root.j = js[js.size() - 1 - static_cast<std::size_t>(below)];
      break;
    }
    out.roots.push_back(root);
  }

  if (out.roots.empty()) {
    out.gap_point.push_back(Rational(0));
  } else {
    out.gap_point.push_back(out.roots.front().x.lo);
    for (const auto& r : out.roots) out.gap_point.push_back(r.x.hi);
  }
  for (const auto& x : out.gap_point) out.gap_signature.push_back(signature_at_x(a.matrix(), x));
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    // Larger t means smaller x: the gap below the root is t+.
    out.roots[i].jump = out.gap_signature[i] - out.gap_signature[i + 1];
  }
  return out;
}

Position t_position(const CircleAnalysis& ca, const CircleRoot& r, unsigned precision) {
  if (r.k != 0) return Position::exact_at(make_rational(Integer(r.j), Integer(r.k)));
  RootInterval iv = r.x;
  Rational target = 1;
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), precision);
  while (iv.width() > target) iv = bisect(ca.product, iv);
  detail::Enclosure e = detail::enclose_circle_t(iv.lo, iv.hi, precision);
  return {e.lo, e.hi};
}

Position reflect(const Position& p) { return {1 - p.hi, 1 - p.lo}; }

bool position_less(const Position& a, const Position& b) {
  return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
}

}  // namespace

std::vector<Position> jump_locations(const SeifertMatrix& a, unsigned precision) {
  CircleAnalysis ca = analyze(a);
  std::vector<Position> out;
  for (const auto& r : ca.roots) {
    Position p = t_position(ca, r, precision);
    out.push_back(p);
    out.push_back(reflect(p));
  }
  if (ca.root_at_half) out.push_back(Position::exact_at(Rational(1, 2)));
  std::sort(out.begin(), out.end(), position_less);
  return out;
}

int signature_at(const SeifertMatrix& a, const Rational& t_in, unsigned precision) {
  if (!(t_in > 0 && t_in < 1)) throw Error(ErrorCode::InvalidArgument, "signature_at needs t in (0, 1)");
  Rational t = t_in > Rational(1, 2) ? Rational(1 - t_in) : t_in;
  t.canonicalize();
  if (a.size() == 0) return 0;
  UPoly f = seifert_determinant(a);
  if (f.is_zero()) throw Error(ErrorCode::DegenerateForm, "det(tA - A^T) vanishes identically");
  const unsigned long den = t.get_den().get_ui();
  if (f.divisible_by(cyclotomic(den))) {
    throw Error(ErrorCode::EvaluationAtJumpPoint, "the form is singular at t = " + to_string(t_in));
  }
  if (t == Rational(1, 2)) return signature_at_x(a.matrix(), Rational(-2));

  CircleAnalysis ca = analyze(a);
  unsigned prec = std::max(precision, 64U);
  for (;;) {
    detail::Enclosure x = detail::enclose_circle_x(t, prec);
    std::size_t gap = 0;
    bool clear = true;
    for (auto& r : ca.roots) {
      if (x.lo >= r.x.hi) {
        ++gap;
        continue;
      }
      if (x.hi <= r.x.lo) continue;
      clear = false;
      r.x = bisect(ca.product, r.x);
    }
    if (clear) return ca.gap_signature[gap];
    prec += 64;
  }
}

namespace {

std::vector<Jump> normalized_jumps(std::vector<Jump> jumps) {
  std::sort(jumps.begin(), jumps.end(), [](const Jump& x, const Jump& y) { return position_less(x.position, y.position); });
  std::vector<Jump> out;
  for (auto& j : jumps) {
    if (!out.empty() && out.back().position == j.position) {
      out.back().value += j.value;
      if (out.back().value == 0) out.pop_back();
      continue;
    }
    if (j.value != 0) out.push_back(std::move(j));
  }
  return out;
}

bool all_exact(const std::vector<Jump>& jumps) {
  return std::all_of(jumps.begin(), jumps.end(), [](const Jump& j) { return j.position.is_exact(); });
}

}  // namespace

JumpFunction jump_function(const SeifertMatrix& a, unsigned long c, unsigned precision) {
  if (c == 0) throw Error(ErrorCode::InvalidArgument, "the reparametrization factor must be positive");
  JumpFunction out;
  out.ambient_period = Rational(Integer(c));
  out.precision = precision;
  if (a.size() == 0) return out;
  CircleAnalysis ca = analyze(a);
  std::vector<Jump> jumps;
  const Rational scale = out.ambient_period;
  for (const auto& r : ca.roots) {
    if (r.jump == 0) continue;
    Position p = t_position(ca, r, precision);
    Position q = reflect(p);
    jumps.push_back({{p.lo * scale, p.hi * scale}, r.jump});
    jumps.push_back({{q.lo * scale, q.hi * scale}, -r.jump});
  }
  out.jumps = normalized_jumps(std::move(jumps));
  out.exact = all_exact(out.jumps);
  return out;
}

JumpFunction scale_jump_function(const JumpFunction& f, unsigned long q) {
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "the scale factor must be positive");
  const Rational s = Rational(Integer(q));
  JumpFunction out = f;
  out.ambient_period *= s;
  for (auto& j : out.jumps) {
    j.position.lo *= s;
    j.position.hi *= s;
  }
  return out;
}

JumpFunction add_jump_functions(const JumpFunction& a, const JumpFunction& b) {
  if (a.ambient_period != b.ambient_period) {
    throw Error(ErrorCode::InvalidArgument, "jump functions with different ambient periods cannot be added");
  }
  JumpFunction out;
  out.ambient_period = a.ambient_period;
  out.precision = std::min(a.precision, b.precision);
  std::vector<Jump> all = a.jumps;
  all.insert(all.end(), b.jumps.begin(), b.jumps.end());
  out.jumps = normalized_jumps(std::move(all));
  out.exact = all_exact(out.jumps);
  return out;
}

std::vector<std::string> invariant_violations(const JumpFunction& f) {
  std::vector<std::string> out;
  long total = 0;
  for (std::size_t i = 0; i < f.jumps.size(); ++i) {
    const Jump& j = f.jumps[i];
    total += j.value;
    if (j.value % 2 != 0) out.push_back("odd jump " + std::to_string(j.value) + " at index " + std::to_string(i));
    if (j.value == 0) out.push_back("zero jump stored at index " + std::to_string(i));
    if (i > 0 && !position_less(f.jumps[i - 1].position, j.position)) {
      out.push_back("positions not increasing at index " + std::to_string(i));
    }
    if (j.position.lo < 0 || j.position.hi > f.ambient_period) {
      out.push_back("position outside [0, P) at index " + std::to_string(i));
    }
  }
  if (total != 0) out.push_back("jumps sum to " + std::to_string(total) + " over one period");
  return out;
}

std::string to_string(PeriodResult::Kind k) {
  switch (k) {
    case PeriodResult::Kind::Exact: return "exact";
    case PeriodResult::Kind::ZeroFunction: return "zero-function";
    case PeriodResult::Kind::NumericUnknown: return "numeric-unknown";
  }
  return "unknown";
}

namespace {

// Closed intervals [a, b] and [c, d] meet somewhere modulo P.
bool meet_mod(const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& period) {
  for (int m = -1; m <= 1; ++m) {
    Rational shift = period * m;
    if (a <= d + shift && c + shift <= b) return true;
  }
  return false;
}

}  // namespace

PeriodResult minimal_period(const JumpFunction& f) {
  PeriodResult out;
  if (f.jumps.empty()) return out;
  const Rational& period = f.ambient_period;
  const std::size_t n = f.jumps.size();

  std::vector<std::size_t> divisors;
  for (std::size_t k = n; k >= 2; --k)
    if (n % k == 0) divisors.push_back(k);

  if (f.exact && all_exact(f.jumps)) {
    std::map<Rational, long> table;
    for (const auto& j : f.jumps) table.emplace(j.position.lo, j.value);
    for (std::size_t k : divisors) {
      Rational shift = period / Rational(Integer(static_cast<unsigned long>(k)));
      bool ok = std::all_of(f.jumps.begin(), f.jumps.end(), [&](const Jump& j) {
        auto it = table.find(mod_rational(j.position.lo + shift, period));
        return it != table.end() && it->second == j.value;
      });
      if (ok) {
        out.kind = PeriodResult::Kind::Exact;
        out.c0 = shift;
        return out;
      }
    }
    out.kind = PeriodResult::Kind::Exact;
    out.c0 = period;
    return out;
  }

  for (std::size_t k : divisors) {
    Rational shift = period / Rational(Integer(static_cast<unsigned long>(k)));
    bool rejected = false;
    for (const auto& j : f.jumps) {
      Rational lo = j.position.lo + shift;
      Rational hi = j.position.hi + shift;
      bool matchable = std::any_of(f.jumps.begin(), f.jumps.end(), [&](const Jump& o) {
        return o.value == j.value && meet_mod(lo, hi, o.position.lo, o.position.hi, period);
      });
      if (!matchable) {
        rejected = true;
        break;
      }
    }
    if (!rejected) {
      out.kind = PeriodResult::Kind::NumericUnknown;
      out.c0 = shift;
      return out;
    }
  }
  out.kind = PeriodResult::Kind::Exact;
  out.c0 = period;
  return out;
}

}  // namespace conclab
