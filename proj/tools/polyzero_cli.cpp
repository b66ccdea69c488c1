// Command-line driver: deterministic experiments over random polynomials
// (vertex counts, zero counts on curves, sign-flip enumerations, certificate
// sweeps) with CSV/JSON emission.
//
// Exit codes: 0 success, 2 config error, 3 assertion/certificate failure,
// 4 numerical failure budget exceeded.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyzero/aberth.hpp"
#include "polyzero/certificates.hpp"
#include "polyzero/harness.hpp"
#include "polyzero/io.hpp"
#include "polyzero/newton_hadamard.hpp"
#include "polyzero/rng.hpp"
#include "polyzero/sturm.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace polyzero;

namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<long> trials;
  std::optional<int> n;
  std::optional<int> workers;
  std::optional<std::string> format;
  std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON experiment config");
  cmd->add_option("--seed", flags.seed, "master seed (overrides config)");
  cmd->add_option("--trials", flags.trials, "trial count (overrides config)");
  cmd->add_option("--n", flags.n, "polynomial degree (overrides config)");
  cmd->add_option("--workers", flags.workers, "worker threads; 1 = serial");
  cmd->add_option("--format", flags.format, "per-trial output format: csv|json");
  cmd->add_option("--out", flags.out_dir, "output directory");
}

ExperimentConfig resolve_config(const CommonFlags& flags) {
  ExperimentConfig cfg;
  if (!flags.config_path.empty()) cfg = load_config(flags.config_path);
  if (flags.seed) cfg.master_seed = *flags.seed;
  if (flags.trials) cfg.trials = *flags.trials;
  if (flags.n) cfg.model.n = *flags.n;
  if (flags.workers) cfg.workers = *flags.workers;
  if (flags.format) {
    if (*flags.format != "csv" && *flags.format != "json") {
      throw ConfigError("format must be csv or json");
    }
    cfg.format = *flags.format;
  }
  return cfg;
}

FlipModel materialize_model(const ExperimentConfig& cfg) {
  Rng rng(derive_seed(cfg.master_seed, 0xF17Du, 0));
  return build_sampler(cfg.model)->sample(rng);
}

int run(int argc, char** argv) {
  CLI::App app{"random-polynomial zero-count experiments"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* sample_cmd = app.add_subcommand("sample", "draw polynomials from the model");
  add_common(sample_cmd, flags);

  auto* vcount_cmd = app.add_subcommand("vcount", "vertex structure of a polynomial");
  std::string in_path;
  vcount_cmd->add_option("--in", in_path, "polynomial file (.json or text)")->required();
  vcount_cmd->add_option("--out", flags.out_dir, "output directory");

  auto* zeros_cmd = app.add_subcommand("zeros", "all roots of a polynomial");
  zeros_cmd->add_option("--in", in_path, "polynomial file (.json or text)")->required();
  zeros_cmd->add_option("--out", flags.out_dir, "output directory");

  auto* theorem1_cmd =
      app.add_subcommand("theorem1", "zero-count ratio study over random trials");
  add_common(theorem1_cmd, flags);

  auto* corollary_cmd =
      app.add_subcommand("corollary-v", "mean vertex count against the harmonic bound");
  add_common(corollary_cmd, flags);

  auto* theorem2_cmd =
      app.add_subcommand("theorem2", "exhaustive sign-flip arc-maximum study");
  add_common(theorem2_cmd, flags);

  auto* turan_cmd = app.add_subcommand("turan-b", "empirical Turan constant estimation");
  add_common(turan_cmd, flags);
  int turan_m = 2;
  std::vector<double> turan_lengths = {0.4, 0.2, 0.1};
  turan_cmd->add_option("--m", turan_m, "number of exponential terms");
  turan_cmd->add_option("--lengths", turan_lengths, "interval lengths");

  auto* certify_cmd = app.add_subcommand("certify", "certificate sweeps over random inputs");
  add_common(certify_cmd, flags);

  auto* verify_cmd = app.add_subcommand("verify-csv", "recompute a summary from its CSV");
  std::string verify_csv_path;
  std::string verify_summary_path;
  verify_cmd->add_option("--in", verify_csv_path, "per-trial CSV")->required();
  verify_cmd->add_option("--summary", verify_summary_path, "summary JSON")->required();

  CLI11_PARSE(app, argc, argv);

  if (sample_cmd->parsed()) {
    const ExperimentConfig cfg = resolve_config(flags);
    fs::create_directories(flags.out_dir);
    const auto sampler = build_sampler(cfg.model);
    if (cfg.format == "json") {
      json arr = json::array();
      for (long i = 0; i < cfg.trials; ++i) {
        Rng rng(derive_seed(cfg.master_seed, 1, static_cast<std::uint64_t>(i)));
        const FlipModel model = sampler->sample(rng);
        arr.push_back(polynomial_to_json(sample_flip(model, SignSequence::random(model.n(), rng))));
      }
      write_text_file(fs::path(flags.out_dir) / "samples.json", arr.dump(2) + "\n");
      std::cout << "wrote " << cfg.trials << " polynomials to samples.json\n";
    } else {
      for (long i = 0; i < cfg.trials; ++i) {
        Rng rng(derive_seed(cfg.master_seed, 1, static_cast<std::uint64_t>(i)));
        const FlipModel model = sampler->sample(rng);
        char name[32];
        std::snprintf(name, sizeof(name), "sample_%04ld.txt", i);
        save_polynomial(fs::path(flags.out_dir) / name,
                        sample_flip(model, SignSequence::random(model.n(), rng)));
      }
      std::cout << "wrote " << cfg.trials << " polynomials\n";
    }
    return 0;
  }

  if (vcount_cmd->parsed()) {
    const Polynomial p = load_polynomial(in_path);
    std::cout << polygon_to_json(polygon(p)).dump(2) << "\n";
    return 0;
  }

  if (zeros_cmd->parsed()) {
    const Polynomial p = load_polynomial(in_path);
    std::cout << rootset_to_json(all_roots(p)).dump(2) << "\n";
    return 0;
  }

  if (theorem1_cmd->parsed()) {
    const ExperimentConfig cfg = resolve_config(flags);
    const Theorem1Summary summary = run_theorem1(cfg, flags.out_dir);
    std::cout << "theorem1: " << summary.trials << " trials, " << summary.excluded
              << " excluded; ratio q99 = " << summary.ratio.q99 << "\n";
    return 0;
  }

  if (corollary_cmd->parsed()) {
    const ExperimentConfig cfg = resolve_config(flags);
    const CorollarySummary summary = run_corollary_v(cfg);
    fs::create_directories(flags.out_dir);
    write_text_file(fs::path(flags.out_dir) / "corollary_v_summary.json",
                    corollary_summary_to_json(cfg, summary).dump(2) + "\n");
    std::cout << "corollary-v: mean V = " << summary.mean_v << " (bound " << summary.bound
              << ", stderr " << summary.stderr_v << ")\n";
    if (!summary.ok) {
      std::cerr << "mean V exceeds the harmonic bound beyond 3 standard errors\n";
      return 3;
    }
    return 0;
  }

  if (theorem2_cmd->parsed()) {
    const ExperimentConfig cfg = resolve_config(flags);
    const FlipModel model = materialize_model(cfg);
    const Theorem2Report report = theorem2_experiment(
        model, cfg.theorem2.r, cfg.theorem2.interval, cfg.theorem2.m, cfg.theorem2.c_grid,
        cfg.theorem2.grid_points, cfg.workers, cfg.theorem2.mc_samples, cfg.master_seed);
    fs::create_directories(flags.out_dir);
    write_text_file(fs::path(flags.out_dir) / "theorem2_report.json",
                    theorem2_report_to_json(report).dump(2) + "\n");
    std::cout << "theorem2: " << report.total << " sequences, c* = " << report.c_star
              << ", f(c*) = " << report.f_at_c_star << "\n";
    if (report.resolution_limit) {
      std::cout << "note: resolution limit (2^-m below one sequence)\n";
    }
    return 0;
  }

  if (turan_cmd->parsed()) {
    const ExperimentConfig cfg = resolve_config(flags);
    Rng rng(derive_seed(cfg.master_seed, 0x7Bu, 0));
    const int trials = static_cast<int>(std::max(10L, cfg.trials));
    const auto table = estimate_turan_b(turan_m, turan_lengths, trials, rng);
    fs::create_directories(flags.out_dir);
    write_text_file(fs::path(flags.out_dir) / "turan_b.json",
                    turan_table_to_json(turan_m, table).dump(2) + "\n");
    for (const TuranEstimate& row : table) {
      std::cout << "|I| = " << row.interval_length << ": min ratio = " << row.min_ratio
                << ", b_emp = " << row.b_emp << "\n";
    }
    return 0;
  }

  if (certify_cmd->parsed()) {
    const ExperimentConfig cfg = resolve_config(flags);
    const CertifySummary summary = run_certify(cfg);
    fs::create_directories(flags.out_dir);
    write_text_file(fs::path(flags.out_dir) / "certify_report.json",
                    certify_summary_to_json(cfg, summary).dump(2) + "\n");
    std::cout << "certify: sbar " << summary.sbar_pass << "/" << summary.trials << ", jensen "
              << summary.jensen_pass << " pass / " << summary.jensen_skipped
              << " skipped, zero-free " << summary.zero_free_certified << " certified / "
              << summary.zero_free_violations << " violations\n";
    if (!summary.ok) {
      std::cerr << "certificate failure: " << summary.first_failure << "\n";
      return 3;
    }
    return 0;
  }

  if (verify_cmd->parsed()) {
    verify_csv(verify_csv_path, verify_summary_path);
    std::cout << "summary matches the per-trial CSV\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const CertificateFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
