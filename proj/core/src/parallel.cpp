#include "inls/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace inls {

int thread_count() {
  static const int count = [] {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("INLS_LAB_THREADS")) {
      char* end = nullptr;
      long limit = std::strtol(env, &end, 10);
      if (end != env && limit >= 1) n = std::min<long>(n, limit);
    }
    return n;
  }();
  return count;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  const int workers = thread_count();
  constexpr std::size_t kMinChunk = 1 << 14;
  if (workers <= 1 || n < 2 * kMinChunk) {
    fn(0, n);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(workers, (n + kMinChunk - 1) / kMinChunk);
  const std::size_t step = (n + chunks - 1) / chunks;
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * step;
    const std::size_t end = std::min(n, begin + step);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace inls
