#pragma once
// parallel.hpp — deterministic fork/join helper
//
// Work is split into fixed contiguous index blocks, one per worker, so the
// mapping from index to worker never depends on timing. Callers write results
// into index-addressed slots and reduce in index order afterwards; that makes
// outputs identical for any thread count, including 1.

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace pdc {

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

template <class Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn) {
  threads = resolve_threads(threads);
  if (threads > count) threads = count > 0 ? static_cast<unsigned>(count) : 1;
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t lo = count * w / threads;
    const std::uint64_t hi = count * (w + 1) / threads;
    workers.emplace_back([lo, hi, w, &fn, &errors] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace pdc
