#include "octamod/util.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>

namespace octamod {

void fail(const std::string& msg) { throw std::runtime_error(msg); }

namespace {
int g_threads = static_cast<int>(std::thread::hardware_concurrency());
}

void set_thread_count(int n) { g_threads = n < 1 ? 1 : n; }
int thread_count() { return g_threads < 1 ? 1 : g_threads; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  int workers = thread_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mutex;
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string Fnv1a64::hex() const { return format_u64_hex(h); }

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact at each step
  }
  return r;
}

std::string format_u64_hex(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace octamod
