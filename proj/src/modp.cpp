#include "octamod/modp.hpp"

#include "octamod/util.hpp"

namespace octamod {

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin base set for 64-bit inputs
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  require(a % p != 0, "inverse of zero mod p");
  return static_cast<std::uint32_t>(powmod_u64(a, p - 2, p));
}

std::vector<std::uint32_t> select_primes(std::uint64_t seed, int count) {
  SplitMix64 rng(seed);
  std::vector<std::uint32_t> out;
  while (static_cast<int>(out.size()) < count) {
    std::uint32_t cand = static_cast<std::uint32_t>(
        (1u << 30) + 1 + (rng.next() % ((1u << 30) - 2)));
    cand |= 1;
    if (!is_prime_u64(cand)) continue;
    bool dup = false;
    for (auto p : out) dup |= (p == cand);
    if (!dup) out.push_back(cand);
  }
  return out;
}

}  // namespace octamod
