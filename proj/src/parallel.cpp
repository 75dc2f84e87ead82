#include "grashof/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace grashof {

int thread_count() {
  const char* env = std::getenv("GRASHOF_EXPAND_THREADS");
  if (!env || !*env) return 1;
  try {
    const int n = std::stoi(env);
    if (n == 0) return std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 256);
    return std::clamp(n, 1, 256);
  } catch (const std::exception&) {
    return 1;
  }
}

void parallel_for(int n, const std::function<void(int)>& body) {
  const int workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace grashof
