#include "pdc/recovery.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "pdc/errors.hpp"
#include "pdc/irwin_hall.hpp"
#include "pdc/numeric.hpp"
#include "pdc/parallel.hpp"

namespace pdc {

namespace {

void check_walk_params(const ModelParams& params, int ell) {
  if (ell < 1 || ell > kIrwinHallMaxN)
    throw ValidationError("recovery: ell must be in 1..20");
  if (params.n < ell + 2) throw ValidationError("recovery: need n >= ell + 2");
  if (!(params.tau > 0.0)) throw ValidationError("recovery: tau must be positive");
  // The window span (ell+1)*tau/2 must stay within half the circle, or the
  // chain-of-uniform-steps law for the conditional mean stops being exact.
  if ((ell + 1) * params.tau > 1.0)
    throw ValidationError("recovery: need (ell+1)*tau <= 1");
}

}  // namespace

RecoveryConfig make_recovery_config(const ModelParams& params, int ell, double delta,
                                    double epsilon) {
  check_walk_params(params, ell);
  RecoveryConfig cfg;
  cfg.ell = ell;
  cfg.delta = delta > 0.0 ? delta : 3.3 / static_cast<double>(ell);
  cfg.epsilon =
      epsilon > 0.0 ? epsilon : params.tau * std::pow(static_cast<double>(params.n), -cfg.delta / 4.0);
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < params.tau / 2.0))
    throw ValidationError("recovery: epsilon must lie in (0, tau/2)");
  return cfg;
}

double t_cond_mean(const ModelParams& params, int ell, double u) {
  check_walk_params(params, ell);
  if (!(u >= 0.0 && u <= 0.5)) throw ValidationError("t_cond_mean: u must be in [0, 1/2]");
  const double tau = params.tau;
  if (u > (ell + 1) * tau / 2.0) return 0.0;
  // Sum over all ordered tuples of distinct interior vertices; each tuple's
  // walk closes with probability tau^ell times the unit-width window mass of
  // the ell-step uniform sum at offset u/tau.
  const double center = static_cast<double>(ell) / 2.0 + u / tau;
  const double mass = ih_window(ell, center - 0.5, center + 0.5);
  return falling_factorial(params.n - 2, ell) * ipow(tau, ell) * ipow(params.lambda, ell + 1) *
         mass;
}

double delta_gap(const ModelParams& params, const RecoveryConfig& cfg) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < params.tau / 2.0))
    throw ValidationError("delta_gap: epsilon must lie in (0, tau/2)");
  return t_cond_mean(params, cfg.ell, params.tau / 2.0) -
         t_cond_mean(params, cfg.ell, params.tau / 2.0 + cfg.epsilon);
}

double kappa_threshold(const ModelParams& params, const RecoveryConfig& cfg) {
  return t_cond_mean(params, cfg.ell, params.tau / 2.0) - delta_gap(params, cfg) / 2.0;
}

namespace {

double saw_statistic(const StandardizedMatrix& M, const ModelParams& params,
                     const RecoveryConfig& cfg, const EstimateOptions& opt, RandomStream* rng,
                     int a, int b) {
  SawOptions sopt;
  sopt.endpoint_a = a;
  sopt.endpoint_b = b;
  sopt.term_budget = opt.term_budget;
  sopt.threads = opt.threads;
  const SawSpec spec{cfg.ell};

  const bool fits = ipow(static_cast<double>(params.n - 2), cfg.ell) <=
                    static_cast<double>(opt.term_budget);
  SawMode mode = opt.mode;
  if (mode == SawMode::kAuto) {
    if (fits) {
      mode = SawMode::kExact;
    } else if (rng != nullptr) {
      mode = SawMode::kMonteCarlo;
    } else {
      throw BudgetError("estimate_pair: term budget exceeded and no stream for Monte Carlo");
    }
  }
  if (mode == SawMode::kExact) return signed_saw_exact(M, spec, sopt);
  if (rng == nullptr)
    throw ValidationError("estimate_pair: Monte Carlo mode needs a random stream");
  if (opt.mc_samples == 0) throw ValidationError("estimate_pair: mc_samples must be >= 1");
  return signed_saw_mc(M, spec, opt.mc_samples, *rng, false, sopt).estimate;
}

}  // namespace

bool estimate_pair(const Graph& A, const ModelParams& params, const RecoveryConfig& cfg,
                   const EstimateOptions& opt, RandomStream* rng, int a, int b) {
  if (A.n() != params.n) throw ValidationError("estimate_pair: graph size differs from params");
  const StandardizedMatrix M(A, params.q);
  const double kappa = kappa_threshold(params, cfg);
  return saw_statistic(M, params, cfg, opt, rng, a, b) >= kappa;
}

Graph reconstruct_geometry(const Graph& A, const ModelParams& params, const RecoveryConfig& cfg,
                           const ReconstructOptions& opt) {
  if (A.n() != params.n)
    throw ValidationError("reconstruct_geometry: graph size differs from params");
  const int n = params.n;
  const StandardizedMatrix M(A, params.q);
  const double kappa = kappa_threshold(params, cfg);

  EstimateOptions eopt;
  eopt.mc_samples = opt.mc_samples;
  eopt.term_budget = opt.term_budget;
  eopt.threads = 1;  // parallelism is across pairs
  eopt.mode = opt.mode;
  if (opt.mode == SawMode::kAuto) {
    const bool fits = n <= opt.exact_n_guard &&
                      ipow(static_cast<double>(n - 2), cfg.ell) <=
                          static_cast<double>(opt.term_budget);
    eopt.mode = fits ? SawMode::kExact : SawMode::kMonteCarlo;
  }

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  const RandomStream root = RandomStream::from_seed(opt.master_seed).derive("reconstruct");
  std::vector<char> in_window(pairs.size(), 0);
  parallel_for(pairs.size(), opt.threads, [&](std::uint64_t k) {
    const auto [i, j] = pairs[k];
    RandomStream pair_stream = root.derive(k);
    RandomStream* rng = eopt.mode == SawMode::kMonteCarlo ? &pair_stream : nullptr;
    in_window[k] = saw_statistic(M, params, cfg, eopt, rng, i, j) >= kappa ? 1 : 0;
  });

  Graph out(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (in_window[k]) out.set_edge(pairs[k].first, pairs[k].second);
  }
  return out;
}

RecoveryErrorReport recovery_error(const Graph& estimate, const Graph& truth) {
  if (estimate.n() != truth.n()) throw ValidationError("recovery_error: size mismatch");
  const int n = estimate.n();
  std::int64_t bad = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (estimate.has_edge(i, j) != truth.has_edge(i, j)) ++bad;
    }
  }
  RecoveryErrorReport rep;
  rep.frobenius_sq = 2.0 * static_cast<double>(bad);
  rep.mismatch_rate = static_cast<double>(bad) / (static_cast<double>(n) * (n - 1) / 2.0);
  return rep;
}

}  // namespace pdc
