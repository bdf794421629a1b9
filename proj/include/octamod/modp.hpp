#pragma once

#include <cstdint>
#include <vector>

namespace octamod {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p);

bool is_prime_u64(std::uint64_t n);

// p prime, 0 < a < p
std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p);

// Deterministic stream of distinct 31-bit primes in (2^30, 2^31) drawn from
// the given seed. Verification primes must exceed 2^30 so that no invariant
// factor of interest (2, 3, small torsion) is silently killed.
std::vector<std::uint32_t> select_primes(std::uint64_t seed, int count);

// Precomputed Shoup constant for repeated multiplication by a fixed a mod p.
struct ShoupMul {
  std::uint32_t a = 0;
  std::uint32_t p = 1;
  std::uint32_t a_shoup = 0;  // floor(a * 2^32 / p)

  ShoupMul() = default;
  ShoupMul(std::uint32_t a_, std::uint32_t p_) : a(a_), p(p_) {
    a_shoup = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) << 32) / p);
  }
  // x in [0,p) -> a*x mod p
  std::uint32_t mul(std::uint32_t x) const {
    std::uint64_t q = (static_cast<std::uint64_t>(a_shoup) * x) >> 32;
    std::uint64_t r = static_cast<std::uint64_t>(a) * x - q * p;
    if (r >= p) r -= p;
    return static_cast<std::uint32_t>(r);
  }
};

}  // namespace octamod
