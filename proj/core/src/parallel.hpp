#pragma once

// Internal slicing helpers for the parallel stages. Work is always split
// into contiguous slices whose results are combined in slice order, so
// every stage is deterministic regardless of the worker count.

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace chainhull::detail {

inline std::size_t resolve_workers(std::size_t requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<std::size_t>(hw);
}

// Invokes fn(slice, begin, end) for `slices` contiguous index ranges
// covering [0, n). Slice 0 runs on the calling thread, the rest on their
// own threads. fn must only touch state disjoint per slice.
template <typename Fn>
void for_each_slice(std::size_t n, std::size_t slices, Fn&& fn) {
  slices = std::max<std::size_t>(1, std::min(slices, n));
  if (slices <= 1 || n == 0) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  const std::size_t chunk = (n + slices - 1) / slices;
  std::vector<std::future<void>> pending;
  pending.reserve(slices - 1);
  for (std::size_t s = 1; s < slices; ++s) {
    const std::size_t begin = s * chunk;
    if (begin >= n) break;
    const std::size_t end = std::min(n, begin + chunk);
    pending.push_back(std::async(std::launch::async, [&fn, s, begin, end] {
      fn(s, begin, end);
    }));
  }
  fn(std::size_t{0}, std::size_t{0}, std::min(n, chunk));
  for (auto& f : pending) f.get();  // propagates the first worker exception
}

// Number of slices worth spawning for n items: respects `workers` but does
// not split tiny inputs.
inline std::size_t slices_for(std::size_t n, std::size_t workers,
                              std::size_t min_grain = 16384) {
  if (workers <= 1 || n < 2 * min_grain) return 1;
  return std::min(workers, n / min_grain);
}

}  // namespace chainhull::detail
