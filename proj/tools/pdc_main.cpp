// pdc_main.cpp — command-line front end
//
// Subcommands: sample, detect-power, recover, sweep-phase, lowdeg-diag,
// oracle-check. Options can come from a key=value config file (--config, one
// [section] per subcommand) with command-line flags taking precedence.
// Exit codes: 0 success, 1 oracle suite disagreement, 2 invalid input,
// 3 budget guard.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pdc/errors.hpp"
#include "pdc/experiments.hpp"
#include "pdc/graph.hpp"
#include "pdc/lowdeg.hpp"
#include "pdc/models.hpp"
#include "pdc/oracles.hpp"
#include "pdc/recovery.hpp"

namespace {

struct ModelFlags {
  int n = 0;
  double p = 0.0, q = 0.0, tau = 0.0;
};

void add_model_flags(CLI::App* cmd, ModelFlags& m) {
  cmd->add_option("--n", m.n, "number of vertices")->required();
  cmd->add_option("--p", m.p, "edge probability inside the window")->required();
  cmd->add_option("--q", m.q, "edge probability outside the window")->required();
  cmd->add_option("--tau", m.tau, "window width")->required();
}

pdc::SawMode parse_mode(const std::string& s) {
  if (s == "exact") return pdc::SawMode::kExact;
  if (s == "mc") return pdc::SawMode::kMonteCarlo;
  if (s == "auto") return pdc::SawMode::kAuto;
  throw pdc::ValidationError("mode must be exact, mc, or auto");
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planted dense cycle: simulation, inference, and diagnostics"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file, one [section] per subcommand");
  app.get_config_formatter_base()->valueSeparator('=');

  // sample
  auto* sample = app.add_subcommand("sample", "draw one graph (and latents) and write them");
  ModelFlags sample_m;
  add_model_flags(sample, sample_m);
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  bool sample_null_arm = false;
  sample->add_option("--seed", sample_seed, "master seed")->required();
  sample->add_option("--out", sample_out, "output prefix (<out>.graph.txt, <out>.latents.txt)")
      ->required();
  sample->add_flag("--null", sample_null_arm, "sample the matching Erdos-Renyi null instead");

  // detect-power
  auto* detect = app.add_subcommand("detect-power", "paired planted/null detection experiment");
  ModelFlags detect_m;
  add_model_flags(detect, detect_m);
  pdc::DetectionConfig dcfg;
  std::string detect_out;
  detect->add_option("--trials", dcfg.trials, "number of paired trials (>= 20)")->required();
  detect->add_option("--seed", dcfg.master_seed, "master seed")->required();
  detect->add_option("--out", detect_out, "output CSV path")->required();
  detect->add_option("--threads", dcfg.threads, "worker threads (0 = hardware)");
  detect->add_option("--statistic-v", dcfg.statistic_v, "statistic order: 3 (default), 4, or 5");
  detect->add_flag("--control-null", dcfg.control_null, "draw both arms from the null");

  // recover
  auto* recover = app.add_subcommand("recover", "pairwise latent-proximity recovery experiment");
  ModelFlags recover_m;
  add_model_flags(recover, recover_m);
  pdc::RecoveryExperimentConfig rcfg;
  std::string recover_out, recover_mode = "auto";
  int recover_ell = 1;
  double recover_delta = 0.0, recover_epsilon = 0.0;
  recover->add_option("--trials", rcfg.trials, "number of planted trials")->required();
  recover->add_option("--seed", rcfg.master_seed, "master seed")->required();
  recover->add_option("--out", recover_out, "output CSV path")->required();
  recover->add_option("--ell", recover_ell, "walk length (interior vertices)");
  recover->add_option("--delta", recover_delta, "rate exponent (0 = default 3.3/ell)");
  recover->add_option("--epsilon", recover_epsilon, "threshold margin (0 = tau * n^(-delta/4))");
  recover->add_option("--threads", rcfg.threads, "worker threads (0 = hardware)");
  recover->add_option("--mode", recover_mode, "walk evaluation: exact, mc, or auto");
  recover->add_option("--mc-samples", rcfg.mc_samples, "Monte Carlo tuples per walk evaluation");
  recover->add_option("--term-budget", rcfg.term_budget, "exact enumeration term cap");

  // sweep-phase
  auto* sweep = app.add_subcommand("sweep-phase", "grid sweep over p = n^-a, tau = n^-b");
  pdc::SweepConfig scfg;
  std::string sweep_out, sweep_mode = "auto";
  int sweep_trials = 0, sweep_detect_trials = -1, sweep_recover_trials = -1;
  sweep->add_option("--a", scfg.a_list, "density exponents")->required()->expected(-1);
  sweep->add_option("--b", scfg.b_list, "width exponents")->required()->expected(-1);
  sweep->add_option("--n", scfg.n_list, "graph sizes")->required()->expected(-1);
  sweep->add_option("--trials", sweep_trials, "trials per cell for both experiments")->required();
  sweep->add_option("--seed", scfg.master_seed, "master seed")->required();
  sweep->add_option("--out", sweep_out, "output CSV path")->required();
  sweep->add_option("--detect-trials", sweep_detect_trials, "override detection trials per cell");
  sweep->add_option("--recover-trials", sweep_recover_trials, "override recovery trials per cell");
  sweep->add_option("--q-ratio", scfg.q_ratio, "p/q ratio (> 1)");
  sweep->add_option("--ell", scfg.ell, "recovery walk length");
  sweep->add_option("--threads", scfg.threads, "worker threads (0 = hardware)");
  sweep->add_option("--mode", sweep_mode, "walk evaluation: exact, mc, or auto");
  sweep->add_option("--mc-samples", scfg.mc_samples, "Monte Carlo tuples per walk evaluation");
  sweep->add_option("--term-budget", scfg.term_budget, "exact enumeration term cap");

  // lowdeg-diag
  auto* lowdeg = app.add_subcommand("lowdeg-diag", "low-degree advantage and correlation bounds");
  ModelFlags lowdeg_m;
  add_model_flags(lowdeg, lowdeg_m);
  pdc::LowDegConfig lcfg;
  std::uint64_t lowdeg_seed = 0;
  std::string lowdeg_out;
  bool lowdeg_corr = false;
  lowdeg->add_option("--seed", lowdeg_seed, "master seed")->required();
  lowdeg->add_option("--out", lowdeg_out, "output CSV path")->required();
  lowdeg->add_option("--max-edges", lcfg.max_edges, "degree cap D (1..4)");
  lowdeg->add_option("--mc-samples", lcfg.mc_samples, "latent samples per shape");
  lowdeg->add_option("--threads", lcfg.threads, "worker threads (0 = hardware)");
  lowdeg->add_flag("--corr", lowdeg_corr, "also print the recovery correlation bound");

  // oracle-check
  auto* oracle = app.add_subcommand("oracle-check", "run the brute-force equivalence suites");
  std::uint64_t oracle_seed = 1;
  oracle->add_option("--seed", oracle_seed, "suite seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sample->parsed()) {
      const pdc::ModelParams params =
          pdc::make_params(sample_m.n, sample_m.p, sample_m.q, sample_m.tau);
      pdc::RandomStream rng = pdc::derive_stream(sample_seed, "sample");
      if (sample_null_arm) {
        pdc::write_graph(pdc::sample_null(params, rng), sample_out + ".graph.txt");
      } else {
        const pdc::PlantedSample s = pdc::sample_planted(params, rng);
        pdc::write_graph(s.graph, sample_out + ".graph.txt");
        pdc::write_latents(s.latents, sample_out + ".latents.txt");
      }
      return 0;
    }

    if (detect->parsed()) {
      dcfg.params = pdc::make_params(detect_m.n, detect_m.p, detect_m.q, detect_m.tau);
      const auto t0 = std::chrono::steady_clock::now();
      const pdc::DetectionResult res = pdc::detection_experiment(dcfg);
      pdc::write_detection_csv(dcfg, res, elapsed_ms(t0), detect_out);
      std::cout << "separation_ratio=" << res.separation_ratio
                << " holdout_error=" << res.holdout_error << '\n';
      return 0;
    }

    if (recover->parsed()) {
      rcfg.params = pdc::make_params(recover_m.n, recover_m.p, recover_m.q, recover_m.tau);
      rcfg.recovery =
          pdc::make_recovery_config(rcfg.params, recover_ell, recover_delta, recover_epsilon);
      rcfg.mode = parse_mode(recover_mode);
      const auto t0 = std::chrono::steady_clock::now();
      const pdc::RecoveryExperimentResult res = pdc::recovery_experiment(rcfg);
      pdc::write_recovery_csv(rcfg, res, elapsed_ms(t0), recover_out);
      std::cout << "err_rate=" << res.err_rate << " ratio_vs_trivial=" << res.ratio_vs_trivial
                << '\n';
      return 0;
    }

    if (sweep->parsed()) {
      scfg.detect_trials = sweep_detect_trials >= 0 ? sweep_detect_trials : sweep_trials;
      scfg.recover_trials = sweep_recover_trials >= 0 ? sweep_recover_trials : sweep_trials;
      scfg.mode = parse_mode(sweep_mode);
      const std::vector<pdc::SweepCell> cells = pdc::phase_sweep(scfg);
      pdc::write_sweep_csv(scfg, cells, sweep_out);
      int ok = 0;
      for (const auto& c : cells) ok += c.status == "ok" ? 1 : 0;
      std::cout << "cells=" << cells.size() << " ok=" << ok << '\n';
      return 0;
    }

    if (lowdeg->parsed()) {
      const pdc::ModelParams params =
          pdc::make_params(lowdeg_m.n, lowdeg_m.p, lowdeg_m.q, lowdeg_m.tau);
      pdc::RandomStream rng = pdc::derive_stream(lowdeg_seed, "lowdeg");
      const pdc::AdvantageResult adv = pdc::advantage_sq(params, lcfg, rng);
      pdc::write_advantage_csv(adv, params, lcfg, lowdeg_seed, lowdeg_out);
      std::cout << "advantage_sq=" << adv.advantage_sq << " +- " << adv.std_error << '\n';
      if (lowdeg_corr) {
        pdc::RandomStream crng = pdc::derive_stream(lowdeg_seed, "corr");
        const pdc::CorrBound cb = pdc::corr_bound(params, lcfg, crng);
        std::cout << "corr_sq_bound=" << cb.corr_sq_bound << " +- " << cb.std_error
                  << " mmse_lower_bound=" << cb.mmse_lower_bound << '\n';
      }
      return 0;
    }

    if (oracle->parsed()) {
      return pdc::oracle::run_oracle_checks(std::cout, oracle_seed) ? 0 : 1;
    }
  } catch (const pdc::BudgetError& e) {
    std::cerr << "budget guard: " << e.what() << '\n';
    return 3;
  } catch (const pdc::ValidationError& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
