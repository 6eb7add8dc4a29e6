#pragma once
// experiments.hpp — reproducible experiment drivers and CSV reports
//
// Seed policy: every trial draws from a stream derived from (master seed,
// experiment label, trial index, arm). Derivation is collision-resistant and
// stable across releases; identical configs give byte-identical CSVs apart
// from the trailing wall_ms column, independent of thread count.

#include <cstdint>
#include <string>
#include <vector>

#include "pdc/models.hpp"
#include "pdc/recovery.hpp"
#include "pdc/rng.hpp"

namespace pdc {

template <class... Labels>
RandomStream derive_stream(std::uint64_t master_seed, Labels&&... labels) {
  RandomStream s = RandomStream::from_seed(master_seed);
  ((s = s.derive(labels)), ...);
  return s;
}

// ---------------------------------------------------------------------------
// Detection power

struct DetectionConfig {
  ModelParams params;
  int trials = 0;                // >= 20 so the pilot/holdout split is meaningful
  std::uint64_t master_seed = 0;
  unsigned threads = 1;
  bool control_null = false;     // sample both arms from the null
  int statistic_v = 3;           // 3 = triangle fast path; 4 or 5 = brute force, n <= 60
};

struct DetectionResult {
  double mean_planted = 0.0, var_planted = 0.0;
  double mean_null = 0.0, var_null = 0.0;
  double separation_ratio = 0.0;  // |mean gap| / max(sd) over all trials
  double threshold = 0.0;         // midpoint of the pilot-half means
  double type1 = 0.0, type2 = 0.0, holdout_error = 0.0;
  int trials = 0, pilot_trials = 0;
};

// Paired planted/null trials on independent derived streams; threshold set on
// the first half, error rates reported on the held-out half.
DetectionResult detection_experiment(const DetectionConfig& cfg);

// ---------------------------------------------------------------------------
// Recovery error for the distinguished pair

struct RecoveryExperimentConfig {
  ModelParams params;
  RecoveryConfig recovery;
  int trials = 0;
  std::uint64_t master_seed = 0;
  unsigned threads = 1;
  SawMode mode = SawMode::kAuto;
  std::uint64_t mc_samples = 2'000'000ULL;
  std::uint64_t term_budget = 1'000'000'000ULL;
};

struct RecoveryExperimentResult {
  double err_rate = 0.0;             // P{estimate != truth}
  double false_negative_rate = 0.0;  // P{estimate 0 | pair in window}
  double false_positive_rate = 0.0;  // P{estimate 1 | pair not in window}
  double ratio_vs_trivial = 0.0;     // err_rate / tau
  double kappa = 0.0;
  int trials = 0;
  int pair_in_window = 0;            // trials with the pair truly inside
};

RecoveryExperimentResult recovery_experiment(const RecoveryExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// Phase sweep over (a, b, n) with p = n^-a, tau = n^-b, q = p / q_ratio

struct SweepConfig {
  std::vector<double> a_list;
  std::vector<double> b_list;
  std::vector<int> n_list;
  double q_ratio = 2.0;
  int ell = 1;
  int detect_trials = 0;
  int recover_trials = 0;
  std::uint64_t master_seed = 0;
  unsigned threads = 1;
  SawMode mode = SawMode::kAuto;
  std::uint64_t mc_samples = 500'000ULL;
  std::uint64_t term_budget = 1'000'000'000ULL;
};

struct SweepCell {
  int index = 0;
  double a = 0.0, b = 0.0;
  int n = 0;
  ModelParams params;       // valid only when params_ok
  bool params_ok = false;
  bool detect_ok = false;
  bool recover_ok = false;
  DetectionResult detect;
  RecoveryExperimentResult recover;
  std::string status;       // ok | partial | error
  std::string message;
  double wall_ms = 0.0;
};

// Runs every cell; per-cell failures are recorded in the row and the sweep
// continues.
std::vector<SweepCell> phase_sweep(const SweepConfig& cfg);

// ---------------------------------------------------------------------------
// CSV reports. One row per experiment (or per sweep cell), fixed and
// versioned columns, schema named in a leading '#' comment. wall_ms is the
// only volatile column and is always last.

void write_detection_csv(const DetectionConfig& cfg, const DetectionResult& res, double wall_ms,
                         const std::string& path);
void write_recovery_csv(const RecoveryExperimentConfig& cfg, const RecoveryExperimentResult& res,
                        double wall_ms, const std::string& path);
void write_sweep_csv(const SweepConfig& cfg, const std::vector<SweepCell>& cells,
                     const std::string& path);

}  // namespace pdc
