#include <doctest.h>

#include "octamod/kernels.hpp"
#include "octamod/modp.hpp"
#include "octamod/util.hpp"

using namespace octamod;

TEST_SUITE("kernels") {

TEST_CASE("shoup scalar multiply agrees with wide arithmetic") {
  SplitMix64 rng(2);
  for (std::uint32_t p :
       {3u, 5u, 65537u, (1u << 30) + 3u, 2147483629u}) {
    for (int t = 0; t < 200; ++t) {
      std::uint32_t a = rng.below(p);
      std::uint32_t x = rng.below(p);
      ShoupMul m(a, p);
      CHECK(m.mul(x) ==
            static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(a) * x) % p));
    }
  }
}

TEST_CASE("all kernel variants agree with the scalar reference") {
  auto variants = modp_kernel_variants();
  CAPTURE(variants.size());
  SplitMix64 rng(42);
  for (std::uint32_t p : {3u, 7u, (1u << 30) + 3u, 2147483629u}) {
    // lengths around the vector width boundaries
    for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 31u, 64u, 1000u}) {
      std::vector<std::uint32_t> x(n), y0(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = rng.below(p);
        y0[i] = rng.below(p);
      }
      std::uint32_t a = rng.below(p);
      std::vector<std::uint32_t> ref = y0;
      modp_kernels_scalar().axpy(ref.data(), x.data(), n, a, p);
      for (const auto* k : variants) {
        std::vector<std::uint32_t> y = y0;
        k->axpy(y.data(), x.data(), n, a, p);
        CHECK(y == ref);
      }
      std::vector<std::uint32_t> sref = y0;
      modp_kernels_scalar().scale(sref.data(), n, a, p);
      for (const auto* k : variants) {
        std::vector<std::uint32_t> y = y0;
        k->scale(y.data(), n, a, p);
        CHECK(y == sref);
      }
    }
  }
}

TEST_CASE("prime selection is deterministic and in range") {
  auto p1 = select_primes(12345, 4);
  auto p2 = select_primes(12345, 4);
  CHECK(p1 == p2);
  for (auto p : p1) {
    CHECK(p > (1u << 30));
    CHECK(p < (1u << 31));
    CHECK(is_prime_u64(p));
  }
  CHECK(select_primes(999, 3) != select_primes(1000, 3));
}

}  // TEST_SUITE
