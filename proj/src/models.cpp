#include "pdc/models.hpp"

#include <cmath>

#include "pdc/errors.hpp"

namespace pdc {

ModelParams make_params(int n, double p, double q, double tau) {
  if (n < 1) throw ValidationError("make_params: n must be >= 1");
  if (!(q > 0.0 && q < 1.0)) throw ValidationError("make_params: q must be in (0, 1)");
  if (!(p > q && p <= 1.0)) throw ValidationError("make_params: p must be in (q, 1]");
  if (!(tau >= 0.0 && tau <= 0.5)) throw ValidationError("make_params: tau must be in [0, 1/2]");
  ModelParams mp;
  mp.n = n;
  mp.p = p;
  mp.q = q;
  mp.tau = tau;
  mp.r = tau * p + (1.0 - tau) * q;
  mp.mu = (p - mp.r) / std::sqrt(mp.r * (1.0 - mp.r));
  mp.lambda = (p - q) / std::sqrt(q * (1.0 - q));
  return mp;
}

Graph sample_edges_given_latents(const LatentAssignment& la, double p, double q, double tau,
                                 RandomStream& rng) {
  validate_latents(la);
  if (!(q >= 0.0 && p >= q && p <= 1.0))
    throw ValidationError("sample_edges_given_latents: need 0 <= q <= p <= 1");
  if (!(tau >= 0.0 && tau <= 0.5))
    throw ValidationError("sample_edges_given_latents: tau must be in [0, 1/2]");
  const int n = la.n();
  Graph g(n);
  const double half = tau / 2.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool close =
          circle_dist(la.z[static_cast<std::size_t>(i)], la.z[static_cast<std::size_t>(j)]) <= half;
      const double prob = close ? p : q;
      if (rng.next_unit() < prob) g.set_edge(i, j);
    }
  }
  return g;
}

PlantedSample sample_planted(const ModelParams& params, RandomStream& rng) {
  PlantedSample s;
  s.latents = sample_latents(params.n, rng);
  s.graph = sample_edges_given_latents(s.latents, params.p, params.q, params.tau, rng);
  return s;
}

Graph sample_null(const ModelParams& params, RandomStream& rng) {
  Graph g(params.n);
  for (int i = 0; i < params.n; ++i) {
    for (int j = i + 1; j < params.n; ++j) {
      if (rng.next_unit() < params.r) g.set_edge(i, j);
    }
  }
  return g;
}

}  // namespace pdc
