#include "mirror/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace mirror {

size_t worker_count() {
  size_t n = 0;
  if (const char* env = std::getenv("MIRROR_THREADS")) {
    n = static_cast<size_t>(std::strtoul(env, nullptr, 10));
  }
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
  }
  return n;
}

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  const size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const size_t chunk = (n + workers - 1) / workers;
  for (size_t w = 0; w < workers; ++w) {
    const size_t begin = w * chunk;
    const size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end] {
      for (size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace mirror
