#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "polyzero/certificates.hpp"
#include "polyzero/common.hpp"
#include "polyzero/curves.hpp"
#include "polyzero/theta_model.hpp"

namespace polyzero {

enum class CurveKind { kRealAxis, kSpiral, kTable };

struct CurveConfig {
  CurveKind kind = CurveKind::kRealAxis;
  double lipschitz = 0.0;                          // spiral slope
  std::vector<std::pair<double, double>> table;    // (r, theta)
  double tol = 1e-8;
  std::string name() const;
};

enum class ModelKind { kSymmetric, kIidAtoms, kMedian };

struct ModelConfig {
  ModelKind kind = ModelKind::kSymmetric;
  MagnitudeSpec magnitudes{MagnitudeKind::kRademacher, 1.0};
  std::vector<Complex> atoms;                            // iid_atoms
  std::vector<std::pair<double, double>> median_pairs;   // median
  double median = 0.0;
  int n = 2;
  double kappa = 0.5;
  bool nondegenerate = true;
};

std::unique_ptr<ModelSampler> build_sampler(const ModelConfig& cfg);

struct Theorem2ConfigBlock {
  double r = 1.0;
  Interval interval{0.0, 1.0};
  int m = 2;
  std::vector<double> c_grid;  // empty = default grid
  int grid_points = 0;
  std::uint64_t mc_samples = 0;
};

struct ExperimentConfig {
  ModelConfig model;
  long trials = 1000;
  std::uint64_t master_seed = 1;
  std::vector<CurveConfig> curves = {CurveConfig{}};
  double confidence_exponent = 1.0;  // A in the tail bound n^-A
  double ratio_threshold = 10.0;     // user C for the exceedance statistic
  int workers = 0;                   // 0 = all cores, 1 = serial reference
  std::string format = "csv";        // per-trial emission: csv | json
  Theorem2ConfigBlock theorem2;
  int certify_max_degree = 32;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::filesystem::path& path);

struct TrialReport {
  long trial = 0;
  std::uint64_t seed = 0;
  int v = 0;
  int n_real = 0;
  std::vector<int> n_curve;  // one entry per configured curve
  int n_curve_max = 0;
  double ratio = 0.0;  // n_curve_max / (V * ln^3 n)
  bool excluded = false;
  int cert_pass = 0;
  int cert_fail = 0;
  double wall_ms = 0.0;  // in-memory only; never serialized (outputs stay byte-stable)
};

// One independent trial; the seed derives from (master_seed, trial index)
// alone, so any execution order reproduces the same reports.
TrialReport run_one_trial(const ExperimentConfig& cfg, const ModelSampler& sampler, long trial);

// Serial reference implementation.
std::vector<TrialReport> run_trials_serial(const ExperimentConfig& cfg);
// OpenMP over trials; bit-identical to the serial path.
std::vector<TrialReport> run_trials_parallel(const ExperimentConfig& cfg, int workers);
// Dispatches on cfg.workers (1 = serial).
std::vector<TrialReport> run_trials(const ExperimentConfig& cfg);

struct RatioStats {
  double mean = 0.0;
  double q50 = 0.0;
  double q90 = 0.0;
  double q99 = 0.0;
  double max = 0.0;
};

struct Theorem1Summary {
  long trials = 0;
  long excluded = 0;
  RatioStats ratio;
  double exceedance_fraction = 0.0;
  double ratio_threshold = 0.0;
  double mean_v = 0.0;
  int max_v = 0;
  double mean_n_real = 0.0;
  int max_n_real = 0;
  int max_n_curve = 0;
};

// Throws NumericalError when the excluded fraction reaches 1%.
Theorem1Summary summarize_theorem1(const ExperimentConfig& cfg,
                                   const std::vector<TrialReport>& reports);

nlohmann::json theorem1_summary_to_json(const ExperimentConfig& cfg,
                                        const Theorem1Summary& summary);

// Writes <out>/theorem1_trials.csv (or .json) and <out>/theorem1_summary.json.
Theorem1Summary run_theorem1(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

struct CorollarySummary {
  long trials = 0;
  double mean_v = 0.0;
  double stderr_v = 0.0;
  double bound = 0.0;  // 2 H_n
  bool ok = false;     // mean_v <= bound + 3 stderr
  int min_v = 0;
  int max_v = 0;
};

// Requires a model with i.i.d. continuous coefficient magnitudes.
CorollarySummary run_corollary_v(const ExperimentConfig& cfg);
nlohmann::json corollary_summary_to_json(const ExperimentConfig& cfg,
                                         const CorollarySummary& summary);

struct CertifySummary {
  long trials = 0;
  long sbar_pass = 0;
  long jensen_pass = 0;
  long jensen_fail = 0;
  long jensen_skipped = 0;  // numerically vanishing inner circle
  long excluded = 0;        // root-finder failures (either sweep)
  long zero_free_certified = 0;
  long zero_free_unchecked = 0;  // certified but the cross-check root solve failed
  long zero_free_violations = 0;
  bool ok = false;
  std::string first_failure;  // dump of the first offending input, if any
};

CertifySummary run_certify(const ExperimentConfig& cfg);
nlohmann::json certify_summary_to_json(const ExperimentConfig& cfg,
                                       const CertifySummary& summary);

std::string trials_to_csv(const std::vector<TrialReport>& reports);
nlohmann::json trials_to_json(const std::vector<TrialReport>& reports);

// Recomputes every summary statistic from the CSV and compares with the
// summary JSON; throws CertificateFailure on any mismatch.
void verify_csv(const std::filesystem::path& csv_path,
                const std::filesystem::path& summary_path);

constexpr const char* kSupremumNote =
    "statistic covers the configured curve family only; the supremum over all "
    "L-Lipschitz curves is not computable";

}  // namespace polyzero
