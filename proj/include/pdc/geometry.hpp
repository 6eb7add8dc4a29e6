#pragma once
// geometry.hpp — latent positions on the unit-circumference circle

#include <string>
#include <vector>

#include "pdc/rng.hpp"

namespace pdc {

class Graph;

// A point on the circle of circumference 1, stored as a coordinate in [0,1).
using CirclePosition = double;

struct LatentAssignment {
  std::vector<CirclePosition> z;
  int n() const { return static_cast<int>(z.size()); }
};

// Wrap-around distance min(|a-b|, 1-|a-b|); symmetric, in [0, 1/2].
// Callers guarantee a,b in [0,1) (guarded at construction / file read, not here).
inline double circle_dist(CirclePosition a, CirclePosition b) {
  const double d = a >= b ? a - b : b - a;
  return d <= 0.5 ? d : 1.0 - d;
}

// n i.i.d. uniform positions.
LatentAssignment sample_latents(int n, RandomStream& rng);

// Validates every coordinate lies in [0,1).
void validate_latents(const LatentAssignment& z);

// Edge {i,j} present iff circle_dist(z_i, z_j) <= tau/2 (closed inequality).
Graph geometric_graph(const LatentAssignment& z, double tau);

// Text format: header "n <count>", then one "<index> <position>" line per
// vertex, 1-based, positions with 17 significant digits (round-trip exact).
void write_latents(const LatentAssignment& z, const std::string& path);
LatentAssignment read_latents(const std::string& path);

}  // namespace pdc
