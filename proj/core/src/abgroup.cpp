#include "conclab/abgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "conclab/error.hpp"
#include "conclab/primes.hpp"

namespace conclab {

namespace {

constexpr std::uint64_t kSubgroupSearchBound = 1000000;
__extension__ using i128 = __int128;

long mod_floor_long(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> invariant_factors) : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw Error(ErrorCode::InvalidArgument, "invariant factors must be >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
      throw Error(ErrorCode::InvalidArgument, "invariant factors must form a divisibility chain");
    }
  }
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_factors(const std::vector<long>& orders) {
  std::map<long, std::vector<unsigned>> by_prime;
  for (long n : orders) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic factor orders must be positive");
    if (n == 1) continue;
    for (const auto& pp : factorize(Integer(n))) by_prime[pp.prime.get_si()].push_back(pp.exponent);
  }
  std::size_t r = 0;
  for (auto& [p, es] : by_prime) {
    std::sort(es.begin(), es.end(), std::greater<>());
    r = std::max(r, es.size());
  }
  std::vector<long> factors(r, 1);
  for (const auto& [p, es] : by_prime) {
    for (std::size_t i = 0; i < es.size(); ++i) {
      long pk = 1;
      for (unsigned e = 0; e < es[i]; ++e) pk *= p;
      factors[r - 1 - i] *= pk;
    }
  }
  return FiniteAbelianGroup(std::move(factors));
}

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (long d : factors_) n *= d;
  return n;
}

bool FiniteAbelianGroup::contains(const Element& e) const {
  if (e.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] >= factors_[i]) return false;
  return true;
}

Element FiniteAbelianGroup::reduce(Element e) const {
  if (e.size() != factors_.size()) throw Error(ErrorCode::InvalidArgument, "element has the wrong number of coordinates");
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = mod_floor_long(e[i], factors_[i]);
  return e;
}

Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + b[i]) % factors_[i];
  return out;
}

Element FiniteAbelianGroup::negate(const Element& a) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] == 0 ? 0 : factors_[i] - a[i];
  return out;
}

Element FiniteAbelianGroup::multiply(const Element& a, long k) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    i128 v = static_cast<i128>(a[i]) * k % factors_[i];
    out[i] = mod_floor_long(static_cast<long>(v), factors_[i]);
  }
  return out;
}

std::uint64_t FiniteAbelianGroup::encode(const Element& e) const {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    code = code * static_cast<std::uint64_t>(factors_[i]) + static_cast<std::uint64_t>(e[i]);
  }
  return code;
}

Element FiniteAbelianGroup::decode(std::uint64_t code) const {
  Element e(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    auto d = static_cast<std::uint64_t>(factors_[i]);
    e[i] = static_cast<long>(code % d);
    code /= d;
  }
  return e;
}

std::vector<Element> FiniteAbelianGroup::elements(std::uint64_t max_order) const {
  Integer n = order();
  if (n > Integer(static_cast<unsigned long>(max_order))) {
    throw Error(ErrorCode::SizeBoundExceeded, "group of order " + n.get_str() + " exceeds the enumeration bound");
  }
  std::vector<Element> out;
  const std::uint64_t count = n.get_ui();
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) out.push_back(decode(c));
  return out;
}

Element PrimaryPart::embed(const Element& e, const FiniteAbelianGroup& ambient) const {
  Element out = ambient.zero();
  for (std::size_t i = 0; i < coordinates.size(); ++i) out[coordinates[i]] = e[i] * multipliers[i];
  return ambient.reduce(std::move(out));
}

PrimaryPart primary_part(const FiniteAbelianGroup& g, long p) {
  if (!is_prime(Integer(p))) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  PrimaryPart out;
  std::vector<long> factors;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    long d = g.invariant_factors()[i];
    long pk = 1;
    while (d % p == 0) {
      d /= p;
      pk *= p;
    }
    if (pk == 1) continue;
    factors.push_back(pk);
    out.coordinates.push_back(i);
    out.multipliers.push_back(d);
  }
  out.group = FiniteAbelianGroup(std::move(factors));
  return out;
}

bool Subgroup::contains(const Element& e) const { return std::binary_search(elements.begin(), elements.end(), e); }

namespace {

using CodeSet = std::vector<std::uint64_t>;  // sorted

// <H, g> where p g lies in H: the union of the cosets H + k g, k < p.
CodeSet extend(const FiniteAbelianGroup& g, const CodeSet& h, const Element& gen, long p) {
  CodeSet out = h;
  Element step = gen;
  for (long k = 1; k < p; ++k) {
    for (std::uint64_t c : h) out.push_back(g.encode(g.add(g.decode(c), step)));
    step = g.add(step, gen);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup to_subgroup(const FiniteAbelianGroup& g, const CodeSet& codes) {
  Subgroup s;
  s.order = static_cast<long>(codes.size());
  for (std::uint64_t c : codes) s.elements.push_back(g.decode(c));
  std::sort(s.elements.begin(), s.elements.end(), [&](const Element& a, const Element& b) {
    return g.encode(a) < g.encode(b);
  });
  // Greedy generators: smallest element outside the span so far.
  std::set<std::uint64_t> span{g.encode(g.zero())};
  for (std::uint64_t c : codes) {
    if (span.count(c) != 0) continue;
    Element e = g.decode(c);
    s.generators.push_back(e);
    std::vector<std::uint64_t> grow(span.begin(), span.end());
    std::set<std::uint64_t> next(span);
    for (std::size_t idx = 0; idx < grow.size(); ++idx) {
      Element sum = g.add(g.decode(grow[idx]), e);
      if (next.insert(g.encode(sum)).second) grow.push_back(g.encode(sum));
    }
    span = std::move(next);
  }
  return s;
}

}  // namespace

Subgroup generated_subgroup(const FiniteAbelianGroup& g, const std::vector<Element>& gens) {
  std::set<std::uint64_t> seen{g.encode(g.zero())};
  std::deque<Element> queue{g.zero()};
  while (!queue.empty()) {
    Element e = queue.front();
    queue.pop_front();
    for (const auto& x : gens) {
      Element s = g.add(e, g.reduce(x));
      if (seen.insert(g.encode(s)).second) queue.push_back(std::move(s));
    }
  }
  return to_subgroup(g, CodeSet(seen.begin(), seen.end()));
}

std::vector<Subgroup> subgroups_of_order(const FiniteAbelianGroup& gp, long n) {
  const Integer order = gp.order();
  if (order > Integer(static_cast<unsigned long>(kSubgroupSearchBound))) {
    throw Error(ErrorCode::SizeBoundExceeded, "subgroup search is limited to groups of order <= 10^6");
  }
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "subgroup order must be positive");
  long p = 0;
  if (!gp.is_trivial()) {
    auto pp = as_prime_power(Integer(gp.invariant_factors().back()));
    if (!pp) throw Error(ErrorCode::InvalidArgument, "subgroup search needs a p-group");
    p = pp->prime.get_si();
  }
  if (n == 1) return {to_subgroup(gp, {gp.encode(gp.zero())})};
  if (p == 0 || order % n != 0 || !as_prime_power(Integer(n)) || as_prime_power(Integer(n))->prime != p) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(n) + " is not a power of p dividing the group order");
  }

  const std::vector<Element> all = gp.elements(kSubgroupSearchBound);
  std::set<CodeSet> layer{{gp.encode(gp.zero())}};
  for (long size = 1; size < n; size *= p) {
    std::set<CodeSet> next;
    for (const CodeSet& h : layer) {
      std::vector<bool> covered(all.size(), false);
      for (std::uint64_t c : h) covered[c] = true;
      for (std::size_t idx = 0; idx < all.size(); ++idx) {
        if (covered[idx]) continue;
        const Element& x = all[idx];
        if (!std::binary_search(h.begin(), h.end(), gp.encode(gp.multiply(x, p)))) continue;
        CodeSet bigger = extend(gp, h, x, p);
        for (std::uint64_t c : bigger) covered[c] = true;
        next.insert(std::move(bigger));
      }
    }
    layer = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& codes : layer) out.push_back(to_subgroup(gp, codes));
  return out;
}

SquareRootSearch square_root_subgroups(const FiniteAbelianGroup& g, long q) {
  SquareRootSearch out;
  out.primary = primary_part(g, q);
  out.primary_order = out.primary.group.order();
  Integer root = sqrt(out.primary_order);
  out.order_is_square = root * root == out.primary_order;
  if (!out.order_is_square) return out;
  for (const Subgroup& h : subgroups_of_order(out.primary.group, root.get_si())) {
    std::vector<Element> gens;
    for (const auto& e : h.generators) gens.push_back(out.primary.embed(e, g));
    Subgroup s;
    s.order = h.order;
    s.generators = gens;
    for (const auto& e : h.elements) s.elements.push_back(out.primary.embed(e, g));
    std::sort(s.elements.begin(), s.elements.end(), [&](const Element& a, const Element& b) {
      return g.encode(a) < g.encode(b);
    });
    out.candidates.push_back(std::move(s));
  }
  return out;
}

}  // namespace conclab
