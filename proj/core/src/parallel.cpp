#include "ftsreg/parallel.hpp"

#include <atomic>
#include <exception>
#include <limits>
#include <thread>
#include <vector>

#include "ftsreg/errors.hpp"

namespace ftsreg {

namespace {
std::atomic<int> g_max_threads{0};
thread_local bool tl_in_parallel = false;

int resolved_threads() {
  int n = g_max_threads.load();
  if (n <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    n = hw == 0 ? 1 : static_cast<int>(hw);
  }
  return n;
}
} // namespace

void set_max_threads(int n) { g_max_threads.store(n); }

int max_threads() { return resolved_threads(); }

void parallel_for(int n, const std::function<void(int)>& body) {
  if (n <= 0) return;
  int workers = resolved_threads();
  if (workers > n) workers = n;
  if (workers <= 1 || tl_in_parallel || n < 4) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }

  struct ChunkState {
    std::exception_ptr error;
    int error_index = std::numeric_limits<int>::max();
  };
  std::vector<ChunkState> states(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);

  // contiguous static chunks; each chunk stops at its first failure
  for (int w = 0; w < workers; ++w) {
    const int lo = static_cast<int>(static_cast<long long>(n) * w / workers);
    const int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
    pool.emplace_back([lo, hi, w, &states, &body]() {
      tl_in_parallel = true;
      for (int i = lo; i < hi; ++i) {
        try {
          body(i);
        } catch (...) {
          states[w].error = std::current_exception();
          states[w].error_index = i;
          break;
        }
      }
      tl_in_parallel = false;
    });
  }
  for (auto& t : pool) t.join();

  const ChunkState* first = nullptr;
  for (const auto& st : states) {
    if (st.error && (!first || st.error_index < first->error_index)) first = &st;
  }
  if (first) std::rethrow_exception(first->error);
}

} // namespace ftsreg
