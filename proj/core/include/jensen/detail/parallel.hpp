#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace jensen {

template <typename T, typename Fn>
std::vector<T> parallel_map(long count, int workers, Fn&& fn) {
  std::vector<std::optional<T>> slots(static_cast<std::size_t>(std::max<long>(count, 0)));
  // Every index runs; the lowest failing index decides which error escapes.
  std::vector<std::exception_ptr> errors(slots.size());
  std::atomic<long> next{0};
  auto run = [&] {
    for (long i = next++; i < count; i = next++) {
      try {
        slots[static_cast<std::size_t>(i)].emplace(fn(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  const long threads = std::clamp<long>(workers, 1, std::max<long>(count, 1));
  if (threads == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (long t = 0; t < threads; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace jensen
