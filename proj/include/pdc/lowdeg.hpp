#pragma once
// lowdeg.hpp — low-degree polynomial diagnostics: signed-moment estimates,
// detection advantage, and the recursive correlation bound for recovery

#include <cstdint>
#include <string>
#include <vector>

#include "pdc/edge_subset.hpp"
#include "pdc/geometry.hpp"
#include "pdc/models.hpp"
#include "pdc/rng.hpp"
#include "pdc/shapes.hpp"

namespace pdc {

struct LowDegConfig {
  int max_edges = 4;              // degree cap D
  int vertex_budget = 8;          // shape enumeration refuses past this
  std::uint64_t mc_samples = 1'000'000ULL;
  unsigned threads = 1;
};

// Number of alpha-edges whose endpoints sit within circle distance tau/2.
int eta(const LatentAssignment& z, const EdgeSubset& alpha, double tau);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  bool exact = false;
};

// Planted mean of the signed subgraph statistic phi_alpha, centered at r.
// Latent-only Monte Carlo of the closed-form conditional expectation
// (mu*tau/(tau-1))^|alpha| * ((tau-1)/tau)^eta(z); no graph sampling, only
// |V(alpha)| uniforms per sample. Dangling-edge alpha returns exact 0;
// empty alpha returns exact 1. Requires tau > 0.
McEstimate phi_expectation_mc(const ModelParams& params, const EdgeSubset& alpha,
                              std::uint64_t samples, RandomStream& rng, unsigned threads = 1);

// Independent cross-check that samples the edge layer too and averages the
// standardized product directly.
McEstimate phi_expectation_graph_mc(const ModelParams& params, const EdgeSubset& alpha,
                                    std::uint64_t samples, RandomStream& rng);

struct ShapeContribution {
  Shape shape;
  double embedding_count = 0.0;
  McEstimate phi;
  double contribution = 0.0;  // embedding_count * phi.mean^2
  bool skipped = false;       // dangling edge or more vertices than edges
};

struct AdvantageResult {
  double advantage_sq = 1.0;  // 1 + sum of enumerated contributions
  double std_error = 0.0;
  std::vector<ShapeContribution> breakdown;
};

// Squared advantage of degree-D polynomials, restricted to the enumerated
// shapes (exact for D <= 4: everything pruned has mean exactly zero).
AdvantageResult advantage_sq(const ModelParams& params, const LowDegConfig& cfg,
                             RandomStream& rng);

// P{alpha \ W = beta}: the chance that exactly the beta-edges of alpha fall
// outside the latent window. beta must be a subset of alpha. Single-edge
// alpha is served analytically (beta=alpha -> 1-tau, beta=empty -> tau).
McEstimate p_alpha_beta_mc(const ModelParams& params, const EdgeSubset& alpha,
                           const EdgeSubset& beta, std::uint64_t samples, RandomStream& rng);

struct RhoEntry {
  RootedShape shape;
  double rho = 0.0;
  double std_error = 0.0;
  double p_alpha_alpha = 0.0;
};

// rho_empty = tau; entries cover connected shapes containing both roots. The
// recursion subtracts sub-shape terms, so entries are filled in edge-count
// order; std errors are first-order propagations (estimates, not intervals).
struct RhoTable {
  double rho_empty = 0.0;
  std::vector<RhoEntry> entries;

  // 0 for shapes missing a root or disconnected; rho_empty for the empty set.
  double lookup(const EdgeSubset& alpha) const;
};

// Degree cap for the recursion defaults to min(cfg.max_edges, 3).
RhoTable rho_table(const ModelParams& params, const LowDegConfig& cfg, RandomStream& rng);

struct CorrBound {
  double corr_sq_bound = 0.0;   // sum over alpha of rho^2 * lambda^(2|alpha|)
  double std_error = 0.0;
  double mmse_lower_bound = 0.0;  // max(0, tau - corr_sq_bound)
};

CorrBound corr_bound(const ModelParams& params, const LowDegConfig& cfg, RandomStream& rng);

// Breakdown CSV (schema pdc-lowdeg-v1): shape_id, edges, vertices, components,
// embedding_count, phi_mean, phi_stderr, contribution.
void write_advantage_csv(const AdvantageResult& result, const ModelParams& params,
                         const LowDegConfig& cfg, std::uint64_t seed, const std::string& path);

}  // namespace pdc
