#pragma once
// standardized.hpp — centered and scaled view of an adjacency matrix

#include <cmath>

#include "pdc/errors.hpp"
#include "pdc/graph.hpp"

namespace pdc {

// Entries are (A_ij - c)/sqrt(c(1-c)): two-valued off the diagonal, zero on
// it. The raw residual A_ij - c is exposed separately so product statistics
// can multiply residuals and apply the 1/sqrt(c(1-c)) scale once at the end.
class StandardizedMatrix {
 public:
  StandardizedMatrix(Graph g, double center) : g_(std::move(g)), c_(center) {
    if (!(center > 0.0 && center < 1.0)) {
      throw ValidationError("standardize: center must lie in (0,1)");
    }
    const double s = std::sqrt(c_ * (1.0 - c_));
    scale_ = 1.0 / s;
    present_ = (1.0 - c_) / s;  // = sqrt((1-c)/c)
    absent_ = -c_ / s;          // = -sqrt(c/(1-c))
  }

  const Graph& graph() const { return g_; }
  int n() const { return g_.n(); }
  double center() const { return c_; }
  double scale() const { return scale_; }
  double present_value() const { return present_; }
  double absent_value() const { return absent_; }

  double entry(int i, int j) const {
    if (i == j) return 0.0;
    return g_.has_edge(i, j) ? present_ : absent_;
  }

  double residual(int i, int j) const {
    if (i == j) return 0.0;
    return g_.has_edge(i, j) ? 1.0 - c_ : -c_;
  }

 private:
  Graph g_;
  double c_;
  double scale_;
  double present_;
  double absent_;
};

inline StandardizedMatrix standardize(Graph g, double center) {
  return StandardizedMatrix(std::move(g), center);
}

}  // namespace pdc
