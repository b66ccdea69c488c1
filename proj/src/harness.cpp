#include "polyzero/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "polyzero/io.hpp"
#include "polyzero/newton_hadamard.hpp"
#include "polyzero/rng.hpp"
#include "polyzero/sturm.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polyzero {

using nlohmann::json;

namespace {

// Seed streams: one per purpose so the subcommands never share draws.
constexpr std::uint64_t kStreamTrial = 1;
constexpr std::uint64_t kStreamCertifySbar = 3;
constexpr std::uint64_t kStreamCertifyJensen = 4;
constexpr std::uint64_t kStreamCertifyZeroFree = 5;

double ln_cubed(int n) {
  const double l = std::log(static_cast<double>(n));
  return l * l * l;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<LipschitzCurve> materialize(const CurveConfig& cfg) {
  switch (cfg.kind) {
    case CurveKind::kRealAxis:
      // The real line is the union of two 0-Lipschitz rays.
      return {LipschitzCurve::ray(0.0), LipschitzCurve::ray(std::numbers::pi)};
    case CurveKind::kSpiral:
      return {LipschitzCurve::log_spiral(cfg.lipschitz)};
    case CurveKind::kTable:
      return {LipschitzCurve::from_table(cfg.table)};
  }
  throw ConfigError("unknown curve kind");
}

}  // namespace

std::string CurveConfig::name() const {
  switch (kind) {
    case CurveKind::kRealAxis:
      return "real-axis";
    case CurveKind::kSpiral:
      return "spiral(L=" + format_double(lipschitz) + ")";
    case CurveKind::kTable:
      return "table";
  }
  return "?";
}

std::unique_ptr<ModelSampler> build_sampler(const ModelConfig& cfg) {
  switch (cfg.kind) {
    case ModelKind::kSymmetric:
      return make_symmetric_model(cfg.magnitudes, cfg.n, cfg.kappa);
    case ModelKind::kIidAtoms:
      return make_iid_atoms_model(cfg.atoms, cfg.n, cfg.kappa);
    case ModelKind::kMedian: {
      FlipModel model = make_median_model(cfg.median_pairs, cfg.median, cfg.kappa);
      if (model.n() != cfg.n) {
        throw ConfigError("median model pair count must be n + 1");
      }
      return make_fixed_model(std::move(model));
    }
  }
  throw ConfigError("unknown model kind");
}

namespace {

MagnitudeSpec magnitudes_from_json(const json& j) {
  MagnitudeSpec spec;
  const std::string kind = j.is_string() ? j.get<std::string>()
                                         : j.value("kind", std::string("rademacher"));
  if (kind == "rademacher") {
    spec.kind = MagnitudeKind::kRademacher;
  } else if (kind == "uniform01") {
    spec.kind = MagnitudeKind::kUniform01;
  } else if (kind == "gaussian") {
    spec.kind = MagnitudeKind::kGaussian;
  } else if (kind == "lognormal") {
    spec.kind = MagnitudeKind::kLogNormal;
    spec.param = j.is_object() ? j.value("sigma", 1.0) : 1.0;
  } else {
    throw ConfigError("unknown magnitude kind: " + kind);
  }
  return spec;
}

std::string magnitudes_to_string(const MagnitudeSpec& spec) {
  switch (spec.kind) {
    case MagnitudeKind::kRademacher:
      return "rademacher";
    case MagnitudeKind::kUniform01:
      return "uniform01";
    case MagnitudeKind::kGaussian:
      return "gaussian";
    case MagnitudeKind::kLogNormal:
      return "lognormal";
  }
  return "?";
}

ModelConfig model_from_json(const json& j) {
  ModelConfig cfg;
  const std::string kind = j.value("kind", std::string("symmetric"));
  if (kind == "symmetric") {
    cfg.kind = ModelKind::kSymmetric;
  } else if (kind == "iid_atoms") {
    cfg.kind = ModelKind::kIidAtoms;
  } else if (kind == "median") {
    cfg.kind = ModelKind::kMedian;
  } else {
    throw ConfigError("unknown model kind: " + kind);
  }
  if (j.contains("magnitudes")) cfg.magnitudes = magnitudes_from_json(j.at("magnitudes"));
  if (j.contains("atoms")) {
    for (const auto& a : j.at("atoms")) {
      if (a.is_number()) {
        cfg.atoms.emplace_back(a.get<double>(), 0.0);
      } else {
        cfg.atoms.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
      }
    }
  }
  if (j.contains("pairs")) {
    for (const auto& p : j.at("pairs")) {
      cfg.median_pairs.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
  }
  cfg.median = j.value("a", 0.0);
  cfg.n = j.value("n", 2);
  cfg.kappa = j.value("kappa", 0.5);
  cfg.nondegenerate = j.value("nondegenerate", true);
  return cfg;
}

json model_to_json(const ModelConfig& cfg) {
  json j;
  switch (cfg.kind) {
    case ModelKind::kSymmetric:
      j["kind"] = "symmetric";
      break;
    case ModelKind::kIidAtoms:
      j["kind"] = "iid_atoms";
      break;
    case ModelKind::kMedian:
      j["kind"] = "median";
      break;
  }
  if (cfg.kind == ModelKind::kSymmetric) {
    if (cfg.magnitudes.kind == MagnitudeKind::kLogNormal) {
      j["magnitudes"] = {{"kind", "lognormal"}, {"sigma", cfg.magnitudes.param}};
    } else {
      j["magnitudes"] = magnitudes_to_string(cfg.magnitudes);
    }
  }
  if (!cfg.atoms.empty()) {
    json atoms = json::array();
    for (const Complex& a : cfg.atoms) atoms.push_back({a.real(), a.imag()});
    j["atoms"] = atoms;
  }
  if (!cfg.median_pairs.empty()) {
    json pairs = json::array();
    for (const auto& [lo, hi] : cfg.median_pairs) pairs.push_back({lo, hi});
    j["pairs"] = pairs;
    j["a"] = cfg.median;
  }
  j["n"] = cfg.n;
  j["kappa"] = cfg.kappa;
  j["nondegenerate"] = cfg.nondegenerate;
  return j;
}

CurveConfig curve_from_json(const json& j) {
  CurveConfig cfg;
  const std::string kind = j.value("kind", std::string("real-axis"));
  if (kind == "real-axis") {
    cfg.kind = CurveKind::kRealAxis;
  } else if (kind == "spiral") {
    cfg.kind = CurveKind::kSpiral;
    cfg.lipschitz = j.value("L", 1.0);
  } else if (kind == "table") {
    cfg.kind = CurveKind::kTable;
    for (const auto& row : j.at("points")) {
      cfg.table.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
    }
  } else {
    throw ConfigError("unknown curve kind: " + kind);
  }
  cfg.tol = j.value("tol", 1e-8);
  return cfg;
}

json curve_to_json(const CurveConfig& cfg) {
  json j;
  switch (cfg.kind) {
    case CurveKind::kRealAxis:
      j["kind"] = "real-axis";
      break;
    case CurveKind::kSpiral:
      j["kind"] = "spiral";
      j["L"] = cfg.lipschitz;
      break;
    case CurveKind::kTable: {
      j["kind"] = "table";
      json points = json::array();
      for (const auto& [r, th] : cfg.table) points.push_back({r, th});
      j["points"] = points;
      break;
    }
  }
  j["tol"] = cfg.tol;
  return j;
}

}  // namespace

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig cfg;
  if (j.contains("model")) cfg.model = model_from_json(j.at("model"));
  cfg.trials = j.value("trials", 1000L);
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  cfg.master_seed = j.value("master_seed", std::uint64_t{1});
  if (j.contains("curves")) {
    cfg.curves.clear();
    for (const auto& c : j.at("curves")) cfg.curves.push_back(curve_from_json(c));
  }
  cfg.confidence_exponent = j.value("A", 1.0);
  cfg.ratio_threshold = j.value("ratio_threshold", 10.0);
  cfg.workers = j.value("workers", 0);
  cfg.format = j.value("format", std::string("csv"));
  if (cfg.format != "csv" && cfg.format != "json") {
    throw ConfigError("format must be csv or json");
  }
  if (j.contains("theorem2")) {
    const json& t = j.at("theorem2");
    cfg.theorem2.r = t.value("r", 1.0);
    if (t.contains("I")) {
      cfg.theorem2.interval = Interval{t.at("I").at(0).get<double>(),
                                       t.at("I").at(1).get<double>()};
    }
    cfg.theorem2.m = t.value("m", 2);
    if (t.contains("c_grid")) {
      cfg.theorem2.c_grid = t.at("c_grid").get<std::vector<double>>();
    }
    cfg.theorem2.grid_points = t.value("grid_points", 0);
    cfg.theorem2.mc_samples = t.value("mc_samples", std::uint64_t{0});
  }
  cfg.certify_max_degree = j.value("certify_max_degree", 32);
  return cfg;
}

json config_to_json(const ExperimentConfig& cfg) {
  json curves = json::array();
  for (const CurveConfig& c : cfg.curves) curves.push_back(curve_to_json(c));
  return json{{"model", model_to_json(cfg.model)},
              {"trials", cfg.trials},
              {"master_seed", cfg.master_seed},
              {"curves", curves},
              {"A", cfg.confidence_exponent},
              {"ratio_threshold", cfg.ratio_threshold},
              {"workers", cfg.workers},
              {"format", cfg.format},
              {"theorem2",
               {{"r", cfg.theorem2.r},
                {"I", {cfg.theorem2.interval.lo, cfg.theorem2.interval.hi}},
                {"m", cfg.theorem2.m},
                {"c_grid", cfg.theorem2.c_grid},
                {"grid_points", cfg.theorem2.grid_points},
                {"mc_samples", cfg.theorem2.mc_samples}}},
              {"certify_max_degree", cfg.certify_max_degree}};
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config parse error: " + std::string(e.what()));
  }
  return config_from_json(j);
}

TrialReport run_one_trial(const ExperimentConfig& cfg, const ModelSampler& sampler, long trial) {
  const auto t0 = std::chrono::steady_clock::now();
  TrialReport rep;
  rep.trial = trial;
  rep.seed = derive_seed(cfg.master_seed, kStreamTrial, static_cast<std::uint64_t>(trial));
  rep.n_curve.assign(cfg.curves.size(), 0);

  Rng rng(rep.seed);
  const FlipModel model = sampler.sample(rng);
  const SignSequence sigma = SignSequence::random(model.n(), rng);
  const Polynomial p = sample_flip(model, sigma);

  if (cfg.model.nondegenerate &&
      (p.coeffs().front() == Complex{} || p.coeffs().back() == Complex{})) {
    rep.excluded = true;  // the law was declared non-degenerate; a zero draw is a failure
    return rep;
  }

  try {
    rep.v = vertex_count(p);

    const bool real_coeffs = p.has_real_coeffs();
    if (real_coeffs) rep.n_real = count_real(p);

    // The root set is shared by every configured curve; it is only needed
    // when some curve cannot be counted by Sturm alone.
    std::optional<RootSet> roots;
    auto ensure_roots = [&]() -> const RootSet& {
      if (!roots) roots = all_roots(p);
      return *roots;
    };

    for (std::size_t ci = 0; ci < cfg.curves.size(); ++ci) {
      const CurveConfig& curve_cfg = cfg.curves[ci];
      int count = 0;
      if (curve_cfg.kind == CurveKind::kRealAxis && real_coeffs) {
        count = rep.n_real;  // Sturm is exact on the real axis
      } else {
        for (const LipschitzCurve& curve : materialize(curve_cfg)) {
          count += count_on_curve(ensure_roots(), curve, curve_cfg.tol).count;
        }
      }
      rep.n_curve[ci] = count;
      rep.n_curve_max = std::max(rep.n_curve_max, count);
    }
    if (!real_coeffs) {
      // With complex coefficients the real axis is counted numerically.
      int count = 0;
      for (const LipschitzCurve& curve :
           {LipschitzCurve::ray(0.0), LipschitzCurve::ray(std::numbers::pi)}) {
        count += count_on_curve(ensure_roots(), curve, 1e-8).count;
      }
      rep.n_real = count;
    }

    rep.ratio = static_cast<double>(rep.n_curve_max) /
                (static_cast<double>(rep.v) * ln_cubed(cfg.model.n));
  } catch (const RootFindingError&) {
    rep.excluded = true;
    rep.v = 0;
    rep.n_real = 0;
    rep.n_curve.assign(cfg.curves.size(), 0);
    rep.n_curve_max = 0;
    rep.ratio = 0.0;
  } catch (const std::domain_error&) {
    // Degenerate draw (for example a zero leading coefficient in a model
    // without the non-degeneracy flag): excluded, not fatal.
    rep.excluded = true;
    rep.v = 0;
    rep.n_real = 0;
    rep.n_curve.assign(cfg.curves.size(), 0);
    rep.n_curve_max = 0;
    rep.ratio = 0.0;
  }

  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

std::vector<TrialReport> run_trials_serial(const ExperimentConfig& cfg) {
  const std::unique_ptr<ModelSampler> sampler = build_sampler(cfg.model);
  std::vector<TrialReport> reports(static_cast<std::size_t>(cfg.trials));
  for (long i = 0; i < cfg.trials; ++i) {
    reports[static_cast<std::size_t>(i)] = run_one_trial(cfg, *sampler, i);
  }
  return reports;
}

std::vector<TrialReport> run_trials_parallel(const ExperimentConfig& cfg, int workers) {
  const std::unique_ptr<ModelSampler> sampler = build_sampler(cfg.model);
  std::vector<TrialReport> reports(static_cast<std::size_t>(cfg.trials));
  std::exception_ptr error;
#ifdef _OPENMP
  const int threads = workers > 1 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (long i = 0; i < cfg.trials; ++i) {
    try {
      reports[static_cast<std::size_t>(i)] = run_one_trial(cfg, *sampler, i);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
#else
  (void)workers;
  for (long i = 0; i < cfg.trials; ++i) {
    reports[static_cast<std::size_t>(i)] = run_one_trial(cfg, *sampler, i);
  }
#endif
  if (error) std::rethrow_exception(error);
  return reports;
}

std::vector<TrialReport> run_trials(const ExperimentConfig& cfg) {
  if (cfg.workers == 1) return run_trials_serial(cfg);
  return run_trials_parallel(cfg, cfg.workers);
}

namespace {

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - std::floor(pos);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

Theorem1Summary summarize_theorem1(const ExperimentConfig& cfg,
                                   const std::vector<TrialReport>& reports) {
  Theorem1Summary s;
  s.trials = static_cast<long>(reports.size());
  s.ratio_threshold = cfg.ratio_threshold;

  std::vector<double> ratios;
  ratios.reserve(reports.size());
  double sum_v = 0.0;
  double sum_n_real = 0.0;
  long exceed = 0;
  for (const TrialReport& r : reports) {
    if (r.excluded) {
      ++s.excluded;
      continue;
    }
    ratios.push_back(r.ratio);
    sum_v += r.v;
    sum_n_real += r.n_real;
    s.max_v = std::max(s.max_v, r.v);
    s.max_n_real = std::max(s.max_n_real, r.n_real);
    s.max_n_curve = std::max(s.max_n_curve, r.n_curve_max);
    if (r.ratio > cfg.ratio_threshold) ++exceed;
  }
  if (ratios.empty()) throw NumericalError("all trials excluded");
  if (static_cast<double>(s.excluded) >= 0.01 * static_cast<double>(s.trials)) {
    throw NumericalError("excluded-trial budget exceeded: " + std::to_string(s.excluded) +
                         " of " + std::to_string(s.trials));
  }

  const double count = static_cast<double>(ratios.size());
  for (double r : ratios) s.ratio.mean += r;
  s.ratio.mean /= count;
  std::sort(ratios.begin(), ratios.end());
  s.ratio.q50 = quantile(ratios, 0.5);
  s.ratio.q90 = quantile(ratios, 0.9);
  s.ratio.q99 = quantile(ratios, 0.99);
  s.ratio.max = ratios.back();
  s.exceedance_fraction = static_cast<double>(exceed) / count;
  s.mean_v = sum_v / count;
  s.mean_n_real = sum_n_real / count;
  return s;
}

json theorem1_summary_to_json(const ExperimentConfig& cfg, const Theorem1Summary& s) {
  return json{{"subcommand", "theorem1"},
              {"note", kSupremumNote},
              {"config", config_to_json(cfg)},
              {"trials", s.trials},
              {"excluded", s.excluded},
              {"ratio",
               {{"mean", s.ratio.mean},
                {"q50", s.ratio.q50},
                {"q90", s.ratio.q90},
                {"q99", s.ratio.q99},
                {"max", s.ratio.max}}},
              {"exceedance",
               {{"threshold", s.ratio_threshold}, {"fraction", s.exceedance_fraction}}},
              {"v", {{"mean", s.mean_v}, {"max", s.max_v}}},
              {"n_real", {{"mean", s.mean_n_real}, {"max", s.max_n_real}}},
              {"n_curve", {{"max", s.max_n_curve}}}};
}

std::string trials_to_csv(const std::vector<TrialReport>& reports) {
  std::string out = "trial,seed,V,N_real,N_curve,ratio,excluded\n";
  char line[256];
  for (const TrialReport& r : reports) {
    std::snprintf(line, sizeof(line), "%ld,%llu,%d,%d,%d,%.17g,%d\n", r.trial,
                  static_cast<unsigned long long>(r.seed), r.v, r.n_real, r.n_curve_max,
                  r.ratio, r.excluded ? 1 : 0);
    out += line;
  }
  return out;
}

json trials_to_json(const std::vector<TrialReport>& reports) {
  json arr = json::array();
  for (const TrialReport& r : reports) {
    arr.push_back({{"trial", r.trial},
                   {"seed", r.seed},
                   {"V", r.v},
                   {"N_real", r.n_real},
                   {"N_curve", r.n_curve_max},
                   {"N_curve_each", r.n_curve},
                   {"ratio", r.ratio},
                   {"excluded", r.excluded}});
  }
  return arr;
}

Theorem1Summary run_theorem1(const ExperimentConfig& cfg, const std::filesystem::path& out_dir) {
  if (cfg.model.n < 2) throw ConfigError("theorem1 requires degree n >= 2");
  std::filesystem::create_directories(out_dir);
  const std::vector<TrialReport> reports = run_trials(cfg);
  const Theorem1Summary summary = summarize_theorem1(cfg, reports);
  if (cfg.format == "csv") {
    write_text_file(out_dir / "theorem1_trials.csv", trials_to_csv(reports));
  } else {
    write_text_file(out_dir / "theorem1_trials.json", trials_to_json(reports).dump(2) + "\n");
  }
  write_text_file(out_dir / "theorem1_summary.json",
                  theorem1_summary_to_json(cfg, summary).dump(2) + "\n");
  return summary;
}

CorollarySummary run_corollary_v(const ExperimentConfig& cfg) {
  const std::unique_ptr<ModelSampler> sampler = build_sampler(cfg.model);
  if (!sampler->iid_continuous_magnitudes()) {
    throw ConfigError(
        "corollary-v requires i.i.d. continuous coefficient magnitudes "
        "(the symmetry argument needs exchangeability without ties)");
  }
  if (cfg.model.n < 1) throw ConfigError("corollary-v requires n >= 1");

  std::vector<int> vs(static_cast<std::size_t>(cfg.trials), 0);
  const auto body = [&](long i) {
    Rng rng(derive_seed(cfg.master_seed, kStreamTrial, static_cast<std::uint64_t>(i)));
    const FlipModel model = sampler->sample(rng);
    const SignSequence sigma = SignSequence::random(model.n(), rng);
    vs[static_cast<std::size_t>(i)] = vertex_count(sample_flip(model, sigma));
  };
  if (cfg.workers == 1) {
    for (long i = 0; i < cfg.trials; ++i) body(i);
  } else {
#ifdef _OPENMP
    std::exception_ptr error;
    const int threads = cfg.workers > 1 ? cfg.workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long i = 0; i < cfg.trials; ++i) {
      try {
        body(i);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
#else
    for (long i = 0; i < cfg.trials; ++i) body(i);
#endif
  }

  CorollarySummary s;
  s.trials = cfg.trials;
  s.min_v = vs[0];
  s.max_v = vs[0];
  double sum = 0.0;
  for (int v : vs) {
    sum += v;
    s.min_v = std::min(s.min_v, v);
    s.max_v = std::max(s.max_v, v);
  }
  s.mean_v = sum / static_cast<double>(cfg.trials);
  double ss = 0.0;
  for (int v : vs) {
    const double d = static_cast<double>(v) - s.mean_v;
    ss += d * d;
  }
  const double variance = cfg.trials > 1 ? ss / static_cast<double>(cfg.trials - 1) : 0.0;
  s.stderr_v = std::sqrt(variance / static_cast<double>(cfg.trials));
  s.bound = harmonic_v_bound(cfg.model.n);
  s.ok = s.mean_v <= s.bound + 3.0 * s.stderr_v;
  return s;
}

json corollary_summary_to_json(const ExperimentConfig& cfg, const CorollarySummary& s) {
  return json{{"subcommand", "corollary-v"},
              {"config", config_to_json(cfg)},
              {"trials", s.trials},
              {"mean_v", s.mean_v},
              {"stderr_v", s.stderr_v},
              {"harmonic_bound", s.bound},
              {"ok", s.ok},
              {"min_v", s.min_v},
              {"max_v", s.max_v}};
}

CertifySummary run_certify(const ExperimentConfig& cfg) {
  CertifySummary s;
  s.trials = cfg.trials;
  const int max_degree = std::max(2, cfg.certify_max_degree);

  for (long i = 0; i < cfg.trials; ++i) {
    // Claim-5 sweep: random complex Gaussian coefficients, log-uniform radius.
    {
      Rng rng(derive_seed(cfg.master_seed, kStreamCertifySbar, static_cast<std::uint64_t>(i)));
      const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * max_degree)));
      std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
      for (Complex& c : coeffs) c = Complex{rng.normal(), rng.normal()};
      const Polynomial p(std::move(coeffs));
      const double r = rng.log_uniform(1e-3, 1e3);
      const SbarCheck check = sbar_check(p, r);
      if (check.ok) {
        ++s.sbar_pass;
      } else if (s.first_failure.empty()) {
        s.first_failure = "sbar r=" + format_double(r) + " poly=" +
                          polynomial_to_json(p).dump();
      }
    }
    // Jensen sweep: random disks around random polynomials.
    {
      Rng rng(derive_seed(cfg.master_seed, kStreamCertifyJensen, static_cast<std::uint64_t>(i)));
      const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree)));
      std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
      for (Complex& c : coeffs) c = Complex{rng.normal(), rng.normal()};
      const Polynomial p(std::move(coeffs));
      const Complex center{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      const double radius = rng.log_uniform(0.1, 2.0);
      try {
        const JensenCheck check = jensen_bound(p, center, radius);
        if (check.ok) {
          ++s.jensen_pass;
        } else {
          ++s.jensen_fail;
          if (s.first_failure.empty()) {
            s.first_failure = "jensen center=(" + format_double(center.real()) + "," +
                              format_double(center.imag()) + ") radius=" +
                              format_double(radius) + " poly=" + polynomial_to_json(p).dump();
          }
        }
      } catch (const NumericalError&) {
        ++s.jensen_skipped;
      } catch (const RootFindingError&) {
        ++s.excluded;
      }
    }
    // Zero-free sweep: wide log-normal coefficients so the certificate fires.
    {
      Rng rng(derive_seed(cfg.master_seed, kStreamCertifyZeroFree,
                          static_cast<std::uint64_t>(i)));
      const int n = 2 + static_cast<int>(rng.below(15));
      std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
      for (Complex& c : coeffs) {
        c = std::polar(std::exp(6.0 * rng.normal()), rng.uniform(0.0, 2.0 * std::numbers::pi));
      }
      const Polynomial p(std::move(coeffs));
      const double t = rng.uniform(-2.0, 2.0);
      const ZeroFreeCertificate cert = zero_free_circle(p, t);
      if (cert.certified) {
        ++s.zero_free_certified;
        const double circle = std::exp(-2.0 * std::numbers::pi * t);
        try {
          const RootSet roots = all_roots(p);
          for (const Complex& z : roots.roots()) {
            if (std::abs(std::abs(z) - circle) <= 1e-9 * circle) {
              ++s.zero_free_violations;
              if (s.first_failure.empty()) {
                s.first_failure = "zero_free t=" + format_double(t) + " poly=" +
                                  polynomial_to_json(p).dump();
              }
              break;
            }
          }
        } catch (const RootFindingError&) {
          ++s.zero_free_unchecked;
          ++s.excluded;
        }
      }
    }
  }
  s.ok = s.sbar_pass == s.trials && s.jensen_fail == 0 && s.zero_free_violations == 0;
  return s;
}

json certify_summary_to_json(const ExperimentConfig& cfg, const CertifySummary& s) {
  return json{{"subcommand", "certify"},
              {"config", config_to_json(cfg)},
              {"trials", s.trials},
              {"sbar_pass", s.sbar_pass},
              {"sbar_pass_rate", static_cast<double>(s.sbar_pass) / s.trials},
              {"jensen_pass", s.jensen_pass},
              {"jensen_fail", s.jensen_fail},
              {"jensen_skipped", s.jensen_skipped},
              {"excluded", s.excluded},
              {"zero_free_certified", s.zero_free_certified},
              {"zero_free_certified_fraction",
               static_cast<double>(s.zero_free_certified) / s.trials},
              {"zero_free_unchecked", s.zero_free_unchecked},
              {"zero_free_violations", s.zero_free_violations},
              {"ok", s.ok},
              {"first_failure", s.first_failure}};
}

void verify_csv(const std::filesystem::path& csv_path,
                const std::filesystem::path& summary_path) {
  std::ifstream summary_in(summary_path);
  if (!summary_in) throw ConfigError("cannot open summary: " + summary_path.string());
  json summary;
  summary_in >> summary;
  const ExperimentConfig cfg = config_from_json(summary.at("config"));

  std::ifstream csv(csv_path);
  if (!csv) throw ConfigError("cannot open csv: " + csv_path.string());
  std::string header;
  std::getline(csv, header);
  if (header != "trial,seed,V,N_real,N_curve,ratio,excluded") {
    throw CertificateFailure("unexpected CSV header: " + header);
  }
  std::vector<TrialReport> reports;
  std::string line;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    TrialReport r;
    unsigned long long seed = 0;
    int excluded = 0;
    if (std::sscanf(line.c_str(), "%ld,%llu,%d,%d,%d,%lg,%d", &r.trial, &seed, &r.v, &r.n_real,
                    &r.n_curve_max, &r.ratio, &excluded) != 7) {
      throw CertificateFailure("unparseable CSV row: " + line);
    }
    r.seed = seed;
    r.excluded = excluded != 0;
    // Per-row invariant: the ratio field must recompute from its own fields.
    if (!r.excluded) {
      const double expect = static_cast<double>(r.n_curve_max) /
                            (static_cast<double>(r.v) * ln_cubed(cfg.model.n));
      if (std::abs(expect - r.ratio) > 1e-12 * (1.0 + std::abs(expect))) {
        throw CertificateFailure("row ratio mismatch at trial " + std::to_string(r.trial));
      }
    }
    reports.push_back(std::move(r));
  }

  const Theorem1Summary recomputed = summarize_theorem1(cfg, reports);
  const json expected = theorem1_summary_to_json(cfg, recomputed);
  const auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a) + std::abs(b));
  };
  const json& got_ratio = summary.at("ratio");
  const json& exp_ratio = expected.at("ratio");
  for (const char* key : {"mean", "q50", "q90", "q99", "max"}) {
    if (!close(got_ratio.at(key).get<double>(), exp_ratio.at(key).get<double>())) {
      throw CertificateFailure(std::string("summary mismatch in ratio.") + key);
    }
  }
  if (summary.at("trials").get<long>() != recomputed.trials ||
      summary.at("excluded").get<long>() != recomputed.excluded) {
    throw CertificateFailure("summary mismatch in trial counts");
  }
  if (!close(summary.at("exceedance").at("fraction").get<double>(),
             recomputed.exceedance_fraction)) {
    throw CertificateFailure("summary mismatch in exceedance fraction");
  }
  if (!close(summary.at("v").at("mean").get<double>(), recomputed.mean_v) ||
      summary.at("v").at("max").get<int>() != recomputed.max_v) {
    throw CertificateFailure("summary mismatch in vertex-count statistics");
  }
  if (!close(summary.at("n_real").at("mean").get<double>(), recomputed.mean_n_real) ||
      summary.at("n_real").at("max").get<int>() != recomputed.max_n_real) {
    throw CertificateFailure("summary mismatch in real-zero statistics");
  }
}

}  // namespace polyzero
