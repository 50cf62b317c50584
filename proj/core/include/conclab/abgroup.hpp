#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conclab/numeric.hpp"

namespace conclab {

/// Coordinates of a group element, one per invariant factor.
using Element = std::vector<long>;

/// Z_{d_1} + ... + Z_{d_r} with d_i >= 2 and d_i | d_{i+1}.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Throws Error(InvalidArgument) unless the list is a divisibility chain of
  /// integers >= 2.
  explicit FiniteAbelianGroup(std::vector<long> invariant_factors);
  /// Direct sum of arbitrary cyclic groups (orders >= 1), brought to
  /// invariant-factor form.
  static FiniteAbelianGroup from_cyclic_factors(const std::vector<long>& orders);
  static FiniteAbelianGroup cyclic(long n) { return from_cyclic_factors({n}); }

  const std::vector<long>& invariant_factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  Integer order() const;
  bool is_trivial() const noexcept { return factors_.empty(); }

  Element zero() const { return Element(factors_.size(), 0); }
  bool contains(const Element& e) const;
  Element reduce(Element e) const;
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element multiply(const Element& a, long k) const;

  /// Mixed-radix index in [0, |G|); only for groups whose order fits in 64 bits.
  std::uint64_t encode(const Element& e) const;
  Element decode(std::uint64_t code) const;
  /// All elements in encoding order. Throws Error(SizeBoundExceeded) above max_order.
  std::vector<Element> elements(std::uint64_t max_order = 1000000) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<long> factors_;
};

/// G_p together with its coordinate embedding: coordinate i of G_p maps to
/// coordinate coordinates[i] of G, multiplied by multipliers[i].
struct PrimaryPart {
  FiniteAbelianGroup group;
  std::vector<std::size_t> coordinates;
  std::vector<long> multipliers;

  Element embed(const Element& e, const FiniteAbelianGroup& ambient) const;
};

/// Throws Error(NotPrime) when p is not prime.
PrimaryPart primary_part(const FiniteAbelianGroup& g, long p);

struct Subgroup {
  std::vector<Element> generators;  // greedy canonical generating set
  std::vector<Element> elements;    // sorted by encoding
  long order = 1;

  bool contains(const Element& e) const;
};

/// Subgroup generated by the given elements.
Subgroup generated_subgroup(const FiniteAbelianGroup& g, const std::vector<Element>& gens);

/// Every subgroup of order n of the p-group gp, sorted by element set.
/// Throws Error(InvalidArgument) when gp is not a p-group or n is not a power
/// of p dividing |gp|, Error(SizeBoundExceeded) when |gp| > 10^6.
std::vector<Subgroup> subgroups_of_order(const FiniteAbelianGroup& gp, long n);

struct SquareRootSearch {
  PrimaryPart primary;
  Integer primary_order;
  bool order_is_square = false;
  std::vector<Subgroup> candidates;  // expressed in the ambient group
};

/// All H <= G_q with |H|^2 = |G_q|. Empty with order_is_square false when
/// |G_q| is not a perfect square.
SquareRootSearch square_root_subgroups(const FiniteAbelianGroup& g, long q);

}  // namespace conclab
