// experiments.cpp — experiment drivers and CSV reports

#include "pdc/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "pdc/accum.hpp"
#include "pdc/errors.hpp"
#include "pdc/geometry.hpp"
#include "pdc/parallel.hpp"
#include "pdc/statistics.hpp"

namespace pdc {

namespace {

double now_ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Commas and newlines would break the one-row-per-cell CSV contract.
std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',') c = ';';
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  return out;
}

const char* mode_name(SawMode mode) {
  switch (mode) {
    case SawMode::kExact: return "exact";
    case SawMode::kMonteCarlo: return "mc";
    default: return "auto";
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Detection

DetectionResult detection_experiment(const DetectionConfig& cfg) {
  if (cfg.trials < 20) {
    throw ValidationError("detection: need trials >= 20 for the pilot/holdout split");
  }
  if (cfg.statistic_v < 3 || cfg.statistic_v > 5) {
    throw ValidationError("detection: statistic order must be 3, 4, or 5");
  }
  if (cfg.statistic_v > 3 && cfg.params.n > 60) {
    throw BudgetError("detection: clique statistics above order 3 are capped at n <= 60");
  }

  const ModelParams& params = cfg.params;
  const auto trials = static_cast<std::uint64_t>(cfg.trials);
  std::vector<double> planted(trials), null_arm(trials);

  auto statistic = [&](Graph g) {
    StandardizedMatrix M(std::move(g), params.r);
    return cfg.statistic_v == 3 ? signed_triangle(M) : signed_clique_count(M, cfg.statistic_v);
  };

  parallel_for(trials, cfg.threads, [&](std::uint64_t t) {
    RandomStream sp = derive_stream(cfg.master_seed, "detect", t, "planted");
    RandomStream sq = derive_stream(cfg.master_seed, "detect", t, "null");
    Graph gp = cfg.control_null ? sample_null(params, sp) : sample_planted(params, sp).graph;
    planted[t] = statistic(std::move(gp));
    null_arm[t] = statistic(sample_null(params, sq));
  });

  RunningStat sp_all, sq_all, sp_pilot, sq_pilot;
  const std::uint64_t pilot = trials / 2;
  for (std::uint64_t t = 0; t < trials; ++t) {
    sp_all.add(planted[t]);
    sq_all.add(null_arm[t]);
    if (t < pilot) {
      sp_pilot.add(planted[t]);
      sq_pilot.add(null_arm[t]);
    }
  }

  DetectionResult res;
  res.trials = cfg.trials;
  res.pilot_trials = static_cast<int>(pilot);
  res.mean_planted = sp_all.mean();
  res.var_planted = sp_all.variance();
  res.mean_null = sq_all.mean();
  res.var_null = sq_all.variance();

  const double sd = std::sqrt(std::max(res.var_planted, res.var_null));
  const double gap = std::fabs(res.mean_planted - res.mean_null);
  res.separation_ratio = sd > 0.0 ? gap / sd : 0.0;

  res.threshold = 0.5 * (sp_pilot.mean() + sq_pilot.mean());
  const bool planted_high = sp_pilot.mean() >= sq_pilot.mean();
  std::uint64_t false_alarm = 0, miss = 0;
  for (std::uint64_t t = pilot; t < trials; ++t) {
    const bool null_says_planted = planted_high ? null_arm[t] >= res.threshold
                                                : null_arm[t] <= res.threshold;
    const bool planted_says_planted = planted_high ? planted[t] >= res.threshold
                                                   : planted[t] <= res.threshold;
    if (null_says_planted) ++false_alarm;
    if (!planted_says_planted) ++miss;
  }
  const double holdout = static_cast<double>(trials - pilot);
  res.type1 = static_cast<double>(false_alarm) / holdout;
  res.type2 = static_cast<double>(miss) / holdout;
  res.holdout_error = 0.5 * (res.type1 + res.type2);
  return res;
}

// ---------------------------------------------------------------------------
// Recovery

RecoveryExperimentResult recovery_experiment(const RecoveryExperimentConfig& cfg) {
  if (cfg.trials < 1) throw ValidationError("recovery experiment: need trials >= 1");

  const ModelParams& params = cfg.params;
  const auto trials = static_cast<std::uint64_t>(cfg.trials);
  std::vector<char> truth(trials), est(trials);

  EstimateOptions opt;
  opt.mode = cfg.mode;
  opt.mc_samples = cfg.mc_samples;
  opt.term_budget = cfg.term_budget;
  opt.threads = 1;  // trials are the parallel axis

  parallel_for(trials, cfg.threads, [&](std::uint64_t t) {
    RandomStream ts = derive_stream(cfg.master_seed, "recover", t);
    PlantedSample s = sample_planted(params, ts);
    truth[t] = circle_dist(s.latents.z[0], s.latents.z[1]) <= params.tau / 2.0 ? 1 : 0;
    est[t] = estimate_pair(s.graph, params, cfg.recovery, opt, &ts) ? 1 : 0;
  });

  std::uint64_t wrong = 0, fn = 0, fp = 0, inside = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (truth[t]) ++inside;
    if (est[t] != truth[t]) {
      ++wrong;
      if (truth[t]) {
        ++fn;
      } else {
        ++fp;
      }
    }
  }

  RecoveryExperimentResult res;
  res.trials = cfg.trials;
  res.pair_in_window = static_cast<int>(inside);
  res.err_rate = static_cast<double>(wrong) / static_cast<double>(trials);
  res.false_negative_rate =
      inside > 0 ? static_cast<double>(fn) / static_cast<double>(inside) : 0.0;
  const std::uint64_t outside = trials - inside;
  res.false_positive_rate =
      outside > 0 ? static_cast<double>(fp) / static_cast<double>(outside) : 0.0;
  res.ratio_vs_trivial = res.err_rate / params.tau;
  res.kappa = kappa_threshold(params, cfg.recovery);
  return res;
}

// ---------------------------------------------------------------------------
// Phase sweep

std::vector<SweepCell> phase_sweep(const SweepConfig& cfg) {
  if (cfg.a_list.empty() || cfg.b_list.empty() || cfg.n_list.empty()) {
    throw ValidationError("sweep: a, b, and n lists must be nonempty");
  }
  for (double a : cfg.a_list) {
    if (!(a > 0.0 && a < 1.0)) throw ValidationError("sweep: exponents a must lie in (0,1)");
  }
  for (double b : cfg.b_list) {
    if (!(b > 0.0 && b < 1.0)) throw ValidationError("sweep: exponents b must lie in (0,1)");
  }
  if (!(cfg.q_ratio > 1.0)) throw ValidationError("sweep: q_ratio must exceed 1");
  if (cfg.ell < 1) throw ValidationError("sweep: ell must be >= 1");
  if (cfg.detect_trials < 0 || cfg.recover_trials < 0) {
    throw ValidationError("sweep: trial counts must be nonnegative");
  }
  if (cfg.detect_trials > 0 && cfg.detect_trials < 20) {
    throw ValidationError("sweep: detect_trials must be 0 or >= 20");
  }

  std::vector<SweepCell> cells;
  int k = 0;
  for (double a : cfg.a_list) {
    for (double b : cfg.b_list) {
      for (int n : cfg.n_list) {
        SweepCell cell;
        cell.index = k;
        cell.a = a;
        cell.b = b;
        cell.n = n;
        const auto t0 = std::chrono::steady_clock::now();
        std::string msg;

        try {
          const double p = std::pow(static_cast<double>(n), -a);
          const double tau = std::pow(static_cast<double>(n), -b);
          cell.params = make_params(n, p, p / cfg.q_ratio, tau);
          cell.params_ok = true;
        } catch (const std::exception& e) {
          msg = std::string("params: ") + e.what();
        }

        if (cell.params_ok && cfg.detect_trials > 0) {
          try {
            DetectionConfig dc;
            dc.params = cell.params;
            dc.trials = cfg.detect_trials;
            dc.master_seed = derive_stream(cfg.master_seed, "sweep", static_cast<std::uint64_t>(k), "detect").key();
            dc.threads = cfg.threads;
            cell.detect = detection_experiment(dc);
            cell.detect_ok = true;
          } catch (const std::exception& e) {
            if (!msg.empty()) msg += "; ";
            msg += std::string("detect: ") + e.what();
          }
        }

        if (cell.params_ok && cfg.recover_trials > 0) {
          try {
            RecoveryExperimentConfig rc;
            rc.params = cell.params;
            rc.recovery = make_recovery_config(cell.params, cfg.ell);
            rc.trials = cfg.recover_trials;
            rc.master_seed = derive_stream(cfg.master_seed, "sweep", static_cast<std::uint64_t>(k), "recover").key();
            rc.threads = cfg.threads;
            rc.mode = cfg.mode;
            rc.mc_samples = cfg.mc_samples;
            rc.term_budget = cfg.term_budget;
            cell.recover = recovery_experiment(rc);
            cell.recover_ok = true;
          } catch (const std::exception& e) {
            if (!msg.empty()) msg += "; ";
            msg += std::string("recover: ") + e.what();
          }
        }

        const int attempted = (cfg.detect_trials > 0 ? 1 : 0) + (cfg.recover_trials > 0 ? 1 : 0);
        const int succeeded = (cell.detect_ok ? 1 : 0) + (cell.recover_ok ? 1 : 0);
        if (!cell.params_ok) {
          cell.status = "error";
        } else if (attempted == 0 || succeeded == attempted) {
          cell.status = "ok";
        } else if (succeeded > 0) {
          cell.status = "partial";
        } else {
          cell.status = "error";
        }
        cell.message = sanitize(msg);
        cell.wall_ms = now_ms_since(t0);
        cells.push_back(std::move(cell));
        ++k;
      }
    }
  }
  return cells;
}

// ---------------------------------------------------------------------------
// CSV reports

void write_detection_csv(const DetectionConfig& cfg, const DetectionResult& res, double wall_ms,
                         const std::string& path) {
  std::ofstream out = open_csv(path);
  out << "# pdc-detect-v1\n";
  out << "n,p,q,tau,r,mu,lambda,statistic_v,control_null,trials,pilot_trials,seed,"
         "mean_planted,var_planted,mean_null,var_null,separation_ratio,threshold,"
         "type1,type2,holdout_error,wall_ms\n";
  out << cfg.params.n << ',' << fmt(cfg.params.p) << ',' << fmt(cfg.params.q) << ','
      << fmt(cfg.params.tau) << ',' << fmt(cfg.params.r) << ',' << fmt(cfg.params.mu) << ','
      << fmt(cfg.params.lambda) << ',' << cfg.statistic_v << ',' << (cfg.control_null ? 1 : 0)
      << ',' << res.trials << ',' << res.pilot_trials << ',' << cfg.master_seed << ','
      << fmt(res.mean_planted) << ',' << fmt(res.var_planted) << ',' << fmt(res.mean_null) << ','
      << fmt(res.var_null) << ',' << fmt(res.separation_ratio) << ',' << fmt(res.threshold) << ','
      << fmt(res.type1) << ',' << fmt(res.type2) << ',' << fmt(res.holdout_error) << ','
      << fmt(wall_ms) << '\n';
}

void write_recovery_csv(const RecoveryExperimentConfig& cfg, const RecoveryExperimentResult& res,
                        double wall_ms, const std::string& path) {
  std::ofstream out = open_csv(path);
  out << "# pdc-recover-v1\n";
  out << "n,p,q,tau,r,mu,lambda,ell,delta,epsilon,kappa,mode,mc_samples,term_budget,trials,seed,"
         "err_rate,false_negative_rate,false_positive_rate,ratio_vs_trivial,pair_in_window,"
         "wall_ms\n";
  out << cfg.params.n << ',' << fmt(cfg.params.p) << ',' << fmt(cfg.params.q) << ','
      << fmt(cfg.params.tau) << ',' << fmt(cfg.params.r) << ',' << fmt(cfg.params.mu) << ','
      << fmt(cfg.params.lambda) << ',' << cfg.recovery.ell << ',' << fmt(cfg.recovery.delta)
      << ',' << fmt(cfg.recovery.epsilon) << ',' << fmt(res.kappa) << ',' << mode_name(cfg.mode)
      << ',' << cfg.mc_samples << ',' << cfg.term_budget << ',' << res.trials << ','
      << cfg.master_seed << ',' << fmt(res.err_rate) << ',' << fmt(res.false_negative_rate) << ','
      << fmt(res.false_positive_rate) << ',' << fmt(res.ratio_vs_trivial) << ','
      << res.pair_in_window << ',' << fmt(wall_ms) << '\n';
}

void write_sweep_csv(const SweepConfig& cfg, const std::vector<SweepCell>& cells,
                     const std::string& path) {
  std::ofstream out = open_csv(path);
  out << "# pdc-sweep-v1\n";
  out << "index,a,b,n,p,q,tau,q_ratio,ell,detect_trials,recover_trials,seed,"
         "separation_ratio,holdout_error,err_rate,ratio_vs_trivial,status,message,wall_ms\n";
  const double nan = std::nan("");
  for (const SweepCell& c : cells) {
    const double p = std::pow(static_cast<double>(c.n), -c.a);
    const double tau = std::pow(static_cast<double>(c.n), -c.b);
    out << c.index << ',' << fmt(c.a) << ',' << fmt(c.b) << ',' << c.n << ',' << fmt(p) << ','
        << fmt(p / cfg.q_ratio) << ',' << fmt(tau) << ',' << fmt(cfg.q_ratio) << ',' << cfg.ell
        << ',' << cfg.detect_trials << ',' << cfg.recover_trials << ',' << cfg.master_seed << ','
        << fmt(c.detect_ok ? c.detect.separation_ratio : nan) << ','
        << fmt(c.detect_ok ? c.detect.holdout_error : nan) << ','
        << fmt(c.recover_ok ? c.recover.err_rate : nan) << ','
        << fmt(c.recover_ok ? c.recover.ratio_vs_trivial : nan) << ',' << c.status << ','
        << c.message << ',' << fmt(c.wall_ms) << '\n';
  }
}

}  // namespace pdc
