#pragma once
// recovery.hpp — pairwise latent-proximity estimation from walk statistics

#include <cstdint>

#include "pdc/models.hpp"
#include "pdc/rng.hpp"
#include "pdc/standardized.hpp"
#include "pdc/statistics.hpp"

namespace pdc {

// Walk length and threshold margin for the pairwise estimator. epsilon is the
// offset past the window edge used to place the decision threshold; delta is
// the exponent behind the default epsilon = tau * n^(-delta/4).
struct RecoveryConfig {
  int ell = 0;
  double delta = 0.0;
  double epsilon = 0.0;
};

// delta <= 0 or epsilon <= 0 select the defaults (delta = 3.3/ell, chosen so
// ell exceeds 3/delta with 10% slack; epsilon = tau * n^(-delta/4)).
// Enforces ell >= 1, n >= ell+2, tau > 0, (ell+1)*tau <= 1 (the window span
// (ell+1)*tau/2 must stay within half the circle so the conditional mean law
// below is exact), and 0 < epsilon < tau/2.
RecoveryConfig make_recovery_config(const ModelParams& params, int ell, double delta = 0.0,
                                    double epsilon = 0.0);

// Mean of the walk statistic given that the two endpoints sit at circle
// distance u: zero beyond (ell+1)*tau/2, otherwise
// (n-2)(n-3)...(n-1-ell) * tau^ell * lambda^(ell+1) * [window mass of width 1
// centered at ell/2 + u/tau]. The falling factorial counts the ordered
// interior tuples the statistic sums over. u is a circle distance in [0, 1/2];
// the mean is nonincreasing in u and hits zero at (ell+1)*tau/2.
double t_cond_mean(const ModelParams& params, int ell, double u);

// Mean gap between endpoint distances tau/2 and tau/2 + epsilon; positive for
// epsilon in (0, tau/2).
double delta_gap(const ModelParams& params, const RecoveryConfig& cfg);

// Decision threshold: midpoint of the two conditional means above, i.e.
// t_cond_mean(tau/2) - delta_gap/2.
double kappa_threshold(const ModelParams& params, const RecoveryConfig& cfg);

enum class SawMode { kExact, kMonteCarlo, kAuto };

struct EstimateOptions {
  SawMode mode = SawMode::kAuto;
  std::uint64_t mc_samples = 2'000'000ULL;
  std::uint64_t term_budget = 1'000'000'000ULL;
  unsigned threads = 1;
};

// Declares the pair (a,b) inside the latent window iff the walk statistic,
// with (a,b) relabeled as the endpoints, reaches kappa. Exact mode throws
// BudgetError past the term budget; Monte Carlo mode needs a stream.
bool estimate_pair(const Graph& A, const ModelParams& params, const RecoveryConfig& cfg,
                   const EstimateOptions& opt = {}, RandomStream* rng = nullptr, int a = 0,
                   int b = 1);

struct ReconstructOptions {
  SawMode mode = SawMode::kAuto;
  std::uint64_t mc_samples = 2'000'000ULL;
  std::uint64_t term_budget = 1'000'000'000ULL;
  // Auto mode uses exact walks up to this n and Monte Carlo beyond.
  int exact_n_guard = 300;
  unsigned threads = 1;
  std::uint64_t master_seed = 0;
};

// Applies the pairwise estimator to every vertex pair; pairs run in parallel
// with one derived stream per pair index, so output is thread-count invariant.
Graph reconstruct_geometry(const Graph& A, const ModelParams& params, const RecoveryConfig& cfg,
                           const ReconstructOptions& opt = {});

struct RecoveryErrorReport {
  double frobenius_sq = 0.0;  // squared entrywise distance between adjacency matrices
  double mismatch_rate = 0.0; // disagreeing pairs / C(n,2)
};

RecoveryErrorReport recovery_error(const Graph& estimate, const Graph& truth);

}  // namespace pdc
