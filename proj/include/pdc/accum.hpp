#pragma once
// accum.hpp — deterministic floating-point accumulation helpers

#include <cmath>
#include <cstdint>
#include <vector>

namespace pdc {

// Streaming pairwise (binary counter) summation. Error grows like log(N)
// instead of N, and the result depends only on the sequence of values, never
// on timing, so threaded callers that merge per-slot results in index order
// stay bit-reproducible.
class PairwiseAccumulator {
 public:
  void add(double x) {
    std::uint64_t c = count_;
    std::size_t level = 0;
    while (c & 1u) {
      x += stack_[level];
      c >>= 1;
      ++level;
    }
    if (level == stack_.size()) {
      stack_.push_back(x);
    } else {
      stack_[level] = x;
    }
    ++count_;
  }

  double total() const {
    double s = 0.0;
    std::uint64_t c = count_;
    for (std::size_t level = 0; c != 0; ++level, c >>= 1) {
      if (c & 1u) s += stack_[level];
    }
    return s;
  }

  std::uint64_t count() const { return count_; }

 private:
  std::vector<double> stack_;
  std::uint64_t count_ = 0;
};

inline double pairwise_sum(const double* data, std::size_t count) {
  PairwiseAccumulator acc;
  for (std::size_t i = 0; i < count; ++i) acc.add(data[i]);
  return acc.total();
}

inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

// Mean / variance over a stream (Welford). Deterministic for a fixed input
// order; used for Monte Carlo standard errors.
class RunningStat {
 public:
  void add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }

  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  double stderr_of_mean() const {
    return n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
  }

  // Merge preserving left-to-right order semantics.
  void merge(const RunningStat& o) {
    if (o.n_ == 0) return;
    if (n_ == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(n_), nb = static_cast<double>(o.n_);
    const double d = o.mean_ - mean_;
    const double nt = na + nb;
    mean_ += d * nb / nt;
    m2_ += o.m2_ + d * d * na * nb / nt;
    n_ += o.n_;
  }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace pdc
