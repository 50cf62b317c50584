#include "conclab/primes.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "conclab/error.hpp"

namespace conclab {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return r;
}

// These twelve bases are a proven witness set for every n < 2^64.
bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; n odd composite.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1U;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_u64(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (miller_rabin_u64(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (auto small = to_uint64(n)) return miller_rabin_u64(*small);
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<PrimePower> factorize(const Integer& n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorize expects a positive integer");
  std::vector<PrimePower> out;
  Integer rest = n;
  for (unsigned long p = 2; p < (1UL << 16U); p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * Integer(p) > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.push_back({Integer(p), e});
  }
  if (rest == 1) return out;
  auto small = to_uint64(rest);
  if (!small) {
    if (is_prime(rest)) {
      out.push_back({rest, 1});
      return out;
    }
    throw Error(ErrorCode::FactoringScope,
                "composite cofactor " + rest.get_str() + " exceeds the 64-bit factoring scope");
  }
  std::map<u64, unsigned> big;
  factor_u64(*small, big);
  for (auto [p, e] : big) out.push_back({Integer(static_cast<unsigned long>(p)), e});
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& pp : factorize(abs(n))) out.push_back(pp.prime);
  return out;
}

std::optional<PrimePower> as_prime_power(const Integer& n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

}  // namespace conclab
