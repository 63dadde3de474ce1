#ifndef FPSEL_PARALLEL_HPP
#define FPSEL_PARALLEL_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace fpsel {

// Worker count from the FPSEL_WORKERS environment variable; 1 when unset or
// unparsable. Clamped to [1, 256].
inline int worker_count() {
  const char* env = std::getenv("FPSEL_WORKERS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0') return 1;
  if (v < 1) return 1;
  if (v > 256) return 256;
  return int(v);
}

// Splits [0, total) into one contiguous block per worker and runs
// fn(begin, end, slot) on each block. Block boundaries depend only on
// `total` and the worker count, and slots are numbered in index order, so a
// caller that collects per-slot results and merges them by slot obtains the
// same merged sequence for any worker count.
inline void parallel_blocks(
    std::uint64_t total,
    const std::function<void(std::uint64_t, std::uint64_t, int)>& fn) {
  const int workers = worker_count();
  if (total == 0) return;
  if (workers <= 1 || total == 1) {
    fn(0, total, 0);
    return;
  }
  const std::uint64_t w = std::min<std::uint64_t>(workers, total);
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(w));
  for (std::uint64_t s = 0; s < w; ++s) {
    const std::uint64_t begin = total * s / w;
    const std::uint64_t end = total * (s + 1) / w;
    pool.emplace_back([&fn, begin, end, s] { fn(begin, end, int(s)); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace fpsel

#endif  // FPSEL_PARALLEL_HPP
