#include "blaschke/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace blaschke {

int default_thread_count() {
  if (const char* env = std::getenv("ATLAS_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to hardware concurrency
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_rows(int rows, int threads, const std::function<void(int)>& row) {
  if (rows <= 0) return;
  const int workers = std::clamp(threads, 1, rows);
  if (workers == 1) {
    for (int i = 0; i < rows; ++i) row(i);
    return;
  }

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (int i = next.fetch_add(1); i < rows; i = next.fetch_add(1)) {
      try {
        row(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(rows);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace blaschke
