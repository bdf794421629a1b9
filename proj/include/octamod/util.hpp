#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace octamod {

// Contract/certification failures are hard errors, never warnings.
[[noreturn]] void fail(const std::string& msg);

inline void require(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

// Global worker count for parallel_for (1 = serial). Set once by the driver.
void set_thread_count(int n);
int thread_count();

// Chunked parallel map over [0, n). Results are written by index, so the
// outcome is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

struct Fnv1a64 {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  void update(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ULL;
    }
  }
  void update(const std::string& s) { update(s.data(), s.size()); }
  std::string hex() const;
};

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// n choose k as int64; callers stay well inside the range (max C(17,4)-scale
// for basis sizes, C(23,13) for Hilbert work).
std::int64_t binomial(int n, int k);

std::string format_u64_hex(std::uint64_t v);

}  // namespace octamod
