#pragma once
// models.hpp — planted dense cycle model and its matching null

#include "pdc/geometry.hpp"
#include "pdc/graph.hpp"
#include "pdc/rng.hpp"

namespace pdc {

// Edge probabilities: p inside the latent window, q outside, window width tau.
// Derived quantities: r is the edge density of the matching null model, mu and
// lambda are the per-edge signal-to-noise ratios after centering at r and q.
struct ModelParams {
  int n = 0;
  double p = 0.0;
  double q = 0.0;
  double tau = 0.0;

  double r = 0.0;       // tau*p + (1-tau)*q
  double mu = 0.0;      // (p-r)/sqrt(r(1-r))
  double lambda = 0.0;  // (p-q)/sqrt(q(1-q))
};

// Validates n >= 1, 0 < q < p <= 1, 0 <= tau <= 1/2 (q in {0,1} is rejected
// because lambda is undefined there) and fills in the derived fields.
ModelParams make_params(int n, double p, double q, double tau);

struct PlantedSample {
  Graph graph;
  LatentAssignment latents;
};

// Latents first, then one Bernoulli draw per vertex pair in (i,j) order.
PlantedSample sample_planted(const ModelParams& params, RandomStream& rng);

// Erdos-Renyi with density r; same pair order as the planted sampler.
Graph sample_null(const ModelParams& params, RandomStream& rng);

// Edge layer conditional on fixed latents. Takes raw probabilities (only
// 0 <= q <= p <= 1 required) so boundary studies like p=1, q=0 are reachable
// even though make_params rejects them.
Graph sample_edges_given_latents(const LatentAssignment& z, double p, double q, double tau,
                                 RandomStream& rng);

}  // namespace pdc
