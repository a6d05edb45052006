#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "andent/entropy.hpp"

namespace andent {

enum class ProjectorPolicy { automatic, full, windowed };

/// Disorder-ensemble experiment definition. Realization r draws its potential
/// from seed base_seed XOR r, so any subset of realizations is independently
/// reproducible.
struct EnsembleConfig {
  int dim = 1;
  Eigen::Index side_omega = 3;
  Boundary boundary = Boundary::open;
  double hopping = 0.0;
  PotentialKind potential_kind = PotentialKind::uniform;
  double potential_width = 1.0;
  double mu = 0.0;
  double temperature = 0.0;

  std::vector<Eigen::Index> subsystem_sides;
  int realizations = 1;
  std::uint64_t base_seed = 0;

  ProjectorPolicy policy = ProjectorPolicy::automatic;
  Eigen::Index window_cutoff = 50;     // extra sites each side of Lambda (windowed mode)
  Eigen::Index boundary_cutoff = 0;    // truncation for edge functionals; 0 = fit-based
  Eigen::Index pi_max_displacement = 60;
  Eigen::Index pi_box = 10;            // displacement box extent for d >= 2
  Eigen::Index dense_limit = 10000;
  int workers = 0;                     // 0 = hardware concurrency
  bool estimate_decay = true;          // collect correlator statistics (T = 0)

  void validate() const;  // throws ConfigError
  std::uint64_t seed_for(int realization) const {
    return base_seed ^ static_cast<std::uint64_t>(realization);
  }
};

struct EnsembleRecord {
  std::uint64_t seed = 0;
  int realization = 0;
  Eigen::Index subsystem_side = 0;
  EntropyReport report;
  bool valid = false;
  std::string error;
};

/// Per-realization displacement statistics of the correlation matrix,
/// accumulated in extended precision so that the exponential decay stays
/// above the accumulation noise over the fitted displacement range.
struct PiAccumulator {
  int dim = 1;
  Eigen::Index extent = 0;  // quadrant extent per axis; d=1: max displacement
  std::vector<long double> sum_abs, sum_sq;
  std::vector<long long> count;
};

/// Disorder-averaged |P_jk| and |P_jk|^2 by displacement, with standard
/// errors across realizations; symmetrized in the coordinates.
struct PiEstimate {
  int dim = 1;
  Eigen::Index extent = 0;
  std::vector<double> mean_sq, se_sq, mean_abs, se_abs;  // (extent+1)^dim, row-major

  /// Radial profile (d = 1) or axis profile.
  std::vector<double> radial_sq() const;
  std::vector<double> radial_abs() const;
  /// Pi^{(1)}_t: transverse coordinates summed over the measured box.
  std::vector<double> marginal_sq() const;
};

PiEstimate estimate_pi(const std::vector<PiAccumulator>& probes);

/// Least-squares fit of log(value) against displacement: value ~ C e^{-gamma t}.
struct DecayFit {
  bool ok = false;
  double amplitude = 0.0;  // C
  double gamma = 0.0;
  double gamma_se = 0.0;
  double gamma_ci95_lo = 0.0, gamma_ci95_hi = 0.0;
  double r2 = 0.0;
  int points = 0;
  std::string note;
};

/// Fits log values vs |j|; nonpositive values are excluded, fewer than five
/// surviving points reject the fit.
DecayFit fit_localization(const std::vector<double>& displacements,
                          const std::vector<double>& values);

struct CBounds {
  double c_minus = 0.0;
  double c_plus = 0.0;
  bool ordered = true;  // c_minus <= c_plus sanity flag
};

/// Area-law band constants from the marginal profile pi1 (t = 0..D) with the
/// fitted exponential tail beyond the measured range. Rejects tails whose
/// fitted decay rate is not positive.
CBounds compute_c_bounds(const std::vector<double>& pi1, int dim, double tail_amplitude,
                         double tail_gamma);

struct Histogram {
  std::vector<double> edges;    // size bins+1
  std::vector<long long> counts;
  std::vector<double> density;  // integrates to 1
  long long total = 0;
};

/// Freedman-Diaconis binning (>= 100 values), Sturges fallback below.
Histogram histogram(const std::vector<double>& values);
/// Common-edge pair for overlay comparisons.
std::pair<Histogram, Histogram> histogram_shared(const std::vector<double>& a,
                                                 const std::vector<double>& b);

struct Aggregate {
  Eigen::Index subsystem_side = 0;
  long long count = 0;
  double mean_entropy = 0, sd_entropy = 0;
  double mean_lower = 0, sd_lower = 0;
  double mean_upper = 0, sd_upper = 0;
  double mean_upper_tight = 0, sd_upper_tight = 0;
  double mean_l_plus = 0, mean_l_minus = 0, mean_r_plus = 0, mean_r_minus = 0;
  double mean_cal_l_plus = 0, mean_cal_l_minus = 0;
  double mean_cal_u_plus = 0, mean_cal_u_minus = 0;
};

struct WindowValidation {
  bool performed = false;
  bool passed = true;
  Eigen::Index side = 0;
  double max_diff = 0.0;
};

struct EnsembleStats {
  int schema = kSchemaVersion;
  std::string policy_used;
  Eigen::Index boundary_cutoff_used = 0;
  double boundary_tail_estimate = 0.0;
  std::vector<Aggregate> per_l;
  std::map<Eigen::Index, Histogram> hist_lower;
  std::map<Eigen::Index, Histogram> hist_upper_tight;  // same edges as hist_lower per l
  bool has_pi = false;
  PiEstimate pi;
  DecayFit fit_abs;  // on <|P|>
  DecayFit fit_sq;   // on <|P|^2>
  bool has_c_bounds = false;
  CBounds c_bounds;
  WindowValidation validation;
  int excluded = 0;
  std::vector<std::string> errors;
};

struct EnsembleResult {
  EnsembleConfig config;
  std::vector<EnsembleRecord> records;  // ordered by (realization, subsystem side)
  std::vector<PiAccumulator> probes;    // ordered by realization; empty when disabled
  EnsembleStats stats;
};

/// Runs the ensemble across a worker pool. Results are bitwise independent of
/// the worker count: every realization is self-contained and aggregation
/// folds the records in realization order.
EnsembleResult run_ensemble(const EnsembleConfig& config);

}  // namespace andent
