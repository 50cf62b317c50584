#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "conclab/numeric.hpp"

namespace conclab {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic Miller-Rabin below 2^64; GMP's strong test above.
bool is_prime(const Integer& n);

/// Full factorization of n >= 1, primes ascending. Trial division to 2^16,
/// then Miller-Rabin / Pollard-Brent on a cofactor that fits in 64 bits.
/// Throws Error(FactoringScope) when a composite cofactor exceeds 64 bits.
std::vector<PrimePower> factorize(const Integer& n);

std::vector<Integer> prime_divisors(const Integer& n);

/// (p, a) with n = p^a and a >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(const Integer& n);

}  // namespace conclab
