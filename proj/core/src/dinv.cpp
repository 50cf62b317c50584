#include "conclab/dinv.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "conclab/error.hpp"

namespace conclab {

Rational d_lens(long p, long q, long i, bool reversed) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "lens space order must be positive");
  if (i < 0 || i >= p) throw Error(ErrorCode::InvalidArgument, "label out of range [0, p)");
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorCode::NotCoprime, "L(" + std::to_string(p) + "," + std::to_string(q) + ") needs coprime parameters");
  }
  Rational total = 0;
  int sign = 1;
  q = ((q % p) + p) % p;
  while (p > 1) {
    const Integer pp(p), qq(q), ii(i);
    Integer num = (2 * ii + 1 - pp - qq) * (2 * ii + 1 - pp - qq) - pp * qq;
    total += sign * make_rational(num, 4 * pp * qq);
    const long r = p % q;
    i = i % q;
    p = q;
    q = r;
    sign = -sign;
  }
  return reversed ? Rational(-total) : total;
}

Rational d_lens_p1(long p, long i) {
  const Integer pp(p), ii(i);
  return make_rational((2 * ii - pp) * (2 * ii - pp) - pp, 4 * pp);
}

VSequence::VSequence(std::vector<long> values) : values_(std::move(values)) {
  if (values_.empty() || values_.back() != 0) {
    throw Error(ErrorCode::InvalidVSequence, "a V-sequence must end at 0");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) throw Error(ErrorCode::InvalidVSequence, "V-sequence entries must be nonnegative");
    if (i > 0) {
      long step = values_[i - 1] - values_[i];
      if (step != 0 && step != 1) {
        throw Error(ErrorCode::InvalidVSequence, "V_i - V_{i+1} must be 0 or 1 (index " + std::to_string(i - 1) + ")");
      }
    }
  }
}

std::size_t VSequence::genus() const {
  auto it = std::find(values_.begin(), values_.end(), 0L);
  return static_cast<std::size_t>(it - values_.begin());
}

bool is_lspace_knot_polynomial(const AlexanderPolynomial& f) {
  int expected = 1;
  for (auto it = f.poly().terms().rbegin(); it != f.poly().terms().rend(); ++it) {
    if (it->second != expected) return false;
    expected = -expected;
  }
  return true;
}

VSequence v_sequence_lspace(const AlexanderPolynomial& f) {
  if (!is_lspace_knot_polynomial(f)) {
    throw Error(ErrorCode::NotLSpaceKnotPolynomial,
                "'" + to_string(f.poly()) + "' does not have alternating +-1 coefficients");
  }
  std::vector<long> v;
  for (const auto& t : torsion_coefficients(f)) {
    auto small = to_int64(t);
    if (!small) throw Error(ErrorCode::InvalidVSequence, "torsion coefficient out of range");
    v.push_back(static_cast<long>(*small));
  }
  v.push_back(0);
  return VSequence(std::move(v));
}

Rational d_large_surgery(long n, const VSequence& v, long i) {
  const long g = static_cast<long>(v.genus());
  if (n < 1 || n < 2 * g - 1) {
    throw Error(ErrorCode::SurgeryCoefficientTooSmall,
                "large-surgery formula needs n >= max(1, 2g - 1) = " + std::to_string(std::max(1L, 2 * g - 1)));
  }
  if (i < 0 || i >= n) throw Error(ErrorCode::InvalidArgument, "label out of range [0, n)");
  const auto idx = static_cast<std::size_t>(std::min(i, n - i));
  return d_lens_p1(n, i) - 2 * Rational(v.at(idx));
}

bool DTable::is_complete() const {
  Integer n = group.order();
  return Integer(static_cast<unsigned long>(values.size())) == n;
}

std::optional<Rational> DTable::at(const Element& e) const {
  auto it = values.find(e);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

DTable large_surgery_table(long n, const VSequence& v) {
  DTable t;
  t.group = FiniteAbelianGroup::cyclic(n);
  for (long i = 0; i < n; ++i) {
    Element e = t.group.reduce({i});
    t.values[e] = d_large_surgery(n, v, i);
  }
  t.provenance = "large-surgery formula, n = " + std::to_string(n);
  return t;
}

DTable dbar(const DTable& t) {
  auto base = t.at(t.group.zero());
  if (!base) throw Error(ErrorCode::InvalidArgument, "d-table has no value at the basepoint 0");
  DTable out;
  out.group = t.group;
  out.provenance = t.provenance;
  for (const auto& [e, v] : t.values) out.values[e] = v - *base;
  return out;
}

std::string to_string(VanishingResult::Outcome o) {
  switch (o) {
    case VanishingResult::Outcome::Passes: return "PASSES";
    case VanishingResult::Outcome::Obstructed: return "OBSTRUCTED";
    case VanishingResult::Outcome::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

VanishingResult dbar_vanishing_obstruction(const FiniteAbelianGroup& g, long q,
                                           const std::map<Element, Rational>& dbar_values) {
  VanishingResult out;
  SquareRootSearch search = square_root_subgroups(g, q);
  out.order_is_square = search.order_is_square;
  out.candidates = std::move(search.candidates);

  std::set<Element> missing;
  bool undecided = false;
  for (std::size_t c = 0; c < out.candidates.size(); ++c) {
    const Subgroup& h = out.candidates[c];
    bool failed = false;
    std::vector<Element> unknown;
    for (const auto& e : h.elements) {
      auto it = dbar_values.find(e);
      if (it == dbar_values.end()) {
        unknown.push_back(e);
      } else if (it->second != 0) {
        out.failures.emplace_back(c, e);
        failed = true;
        break;
      }
    }
    if (failed) continue;
    if (unknown.empty()) {
      out.outcome = VanishingResult::Outcome::Passes;
      out.witness = h;
      out.missing.clear();
      return out;
    }
    undecided = true;
    missing.insert(unknown.begin(), unknown.end());
  }
  if (undecided) {
    out.outcome = VanishingResult::Outcome::Inconclusive;
    out.missing.assign(missing.begin(), missing.end());
    std::sort(out.missing.begin(), out.missing.end(),
              [&](const Element& a, const Element& b) { return g.encode(a) < g.encode(b); });
  } else {
    out.outcome = VanishingResult::Outcome::Obstructed;
  }
  return out;
}

}  // namespace conclab
