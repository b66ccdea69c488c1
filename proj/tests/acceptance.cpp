// Acceptance suite: end-to-end checks of the statistical and analytic
// guarantees, one pass/fail line per criterion. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "polyzero/aberth.hpp"
#include "polyzero/certificates.hpp"
#include "polyzero/harness.hpp"
#include "polyzero/io.hpp"
#include "polyzero/newton_hadamard.hpp"
#include "polyzero/rng.hpp"
#include "polyzero/sturm.hpp"
#include "polyzero/theta_model.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace polyzero;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;
std::string cli_path;

void criterion(int index, const std::string& name, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0.0 && elapsed > time_limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  std::printf("[%s] criterion %2d: %-38s (%6.1f s)%s%s\n", ok ? "PASS" : "FAIL", index,
              name.c_str(), elapsed, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

char fmtbuf[256];

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  std::snprintf(fmtbuf, sizeof(fmtbuf), pattern, a, b, c);
  return fmtbuf;
}

// --- criterion 1 -----------------------------------------------------------

// Midpoint-rule quadrature of P{lambda_1^2 > lambda_0 lambda_2} for
// independent uniform(0,1) magnitudes: the degree-2 polygon has V = 3 exactly
// when the middle point clears the chord, V = 2 otherwise.
double quadrature_ev_n2() {
  const int grid = 400;
  const double h = 1.0 / grid;
  std::int64_t hits = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : hits) schedule(static)
#endif
  for (int i = 0; i < grid; ++i) {
    const double x = (i + 0.5) * h;
    for (int j = 0; j < grid; ++j) {
      const double y = (j + 0.5) * h;
      const double y2 = y * y;
      for (int k = 0; k < grid; ++k) {
        const double z = (k + 0.5) * h;
        if (y2 > x * z) ++hits;
      }
    }
  }
  const double p3 = static_cast<double>(hits) / (static_cast<double>(grid) * grid * grid);
  return 2.0 + p3;
}

bool criterion1(std::string& detail) {
  ExperimentConfig cfg;
  cfg.model.kind = ModelKind::kSymmetric;
  cfg.model.magnitudes = {MagnitudeKind::kGaussian, 1.0};
  cfg.model.n = 100;
  cfg.trials = 10000;
  cfg.master_seed = 20260810;
  const CorollarySummary s = run_corollary_v(cfg);
  const double bound = harmonic_v_bound(100);
  bool ok = s.mean_v <= bound + 3.0 * s.stderr_v;
  detail = fmt("n=100: mean V=%.4f vs bound %.4f", s.mean_v, bound);

  ExperimentConfig small = cfg;
  small.model.magnitudes = {MagnitudeKind::kUniform01, 1.0};
  small.model.n = 2;
  const CorollarySummary s2 = run_corollary_v(small);
  const double oracle = quadrature_ev_n2();
  ok = ok && std::abs(s2.mean_v - oracle) <= 3.0 * s2.stderr_v;
  detail += fmt("; n=2: mean V=%.4f vs oracle %.4f (3se=%.4f)", s2.mean_v, oracle,
                3.0 * s2.stderr_v);
  return ok;
}

// --- criterion 2 -----------------------------------------------------------

bool criterion2(std::string& detail) {
  FlipModel model;
  model.pairs.assign(11, {Complex{1.0, 0.0}, Complex{-1.0, 0.0}});
  const Interval interval{0.0, 1.0};
  const Theorem2Report report =
      theorem2_experiment(model, 1.0, interval, 2, std::vector<double>{});
  if (report.total != 2048 || !report.exhaustive) {
    detail = "expected exhaustive enumeration of 2^11 sequences";
    return false;
  }
  if (report.c_star <= 0.0) {
    detail = "no passing c on the grid";
    return false;
  }
  // Independent exact recount at the reported c*.
  const double threshold = theorem2_threshold(10, report.c_star, interval.length(), 2);
  const FlipEnumeration enumeration(model);
  std::int64_t fail_count = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : fail_count) schedule(static)
#endif
  for (std::int64_t idx = 0; idx < 2048; ++idx) {
    const Polynomial p = enumeration.polynomial(static_cast<std::uint64_t>(idx));
    const double ratio = arc_max(p, 1.0, interval, report.grid_points) / s_majorant(p, 1.0);
    if (ratio <= threshold) ++fail_count;
  }
  const double f_exact = static_cast<double>(fail_count) / 2048.0;
  detail = fmt("c*=%.5f, exact f(c*)=%.6f vs 2^-2", report.c_star, f_exact);
  return f_exact <= 0.25 && f_exact == report.f_at_c_star;
}

// --- criterion 3 -----------------------------------------------------------

bool criterion3(std::string& detail) {
  std::vector<double> q99s;
  for (int n : {64, 128, 256}) {
    ExperimentConfig cfg;
    cfg.model.kind = ModelKind::kSymmetric;
    cfg.model.magnitudes = {MagnitudeKind::kRademacher, 1.0};
    cfg.model.n = n;
    cfg.trials = 2000;
    cfg.master_seed = 7777;
    cfg.curves = {CurveConfig{}};  // real axis
    const std::vector<TrialReport> reports = run_trials(cfg);
    for (const TrialReport& r : reports) {
      if (r.excluded) {
        detail = "unexpected excluded trial";
        return false;
      }
      if (r.n_real > n) {
        detail = fmt("N_real=%g exceeds n=%g", r.n_real, n);
        return false;
      }
    }
    const Theorem1Summary s = summarize_theorem1(cfg, reports);
    q99s.push_back(s.ratio.q99);
  }
  detail = fmt("q99 ratios: %.5f, %.5f, %.5f", q99s[0], q99s[1], q99s[2]);
  // Non-increasing within 20% slack.
  return q99s[1] <= 1.2 * q99s[0] && q99s[2] <= 1.2 * q99s[1];
}

// --- criteria 4-6: certificate sweeps --------------------------------------

bool criterion4(std::string& detail) {
  const int sweeps = 10000;
  std::int64_t pass = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : pass) schedule(static)
#endif
  for (int i = 0; i < sweeps; ++i) {
    Rng rng(derive_seed(404, 1, static_cast<std::uint64_t>(i)));
    const int n = 1 + static_cast<int>(rng.below(64));
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
    for (auto& c : coeffs) c = Complex{rng.normal(), rng.normal()};
    const Polynomial p(std::move(coeffs));
    const double r = rng.log_uniform(1e-3, 1e3);
    if (sbar_check(p, r).ok) ++pass;
  }
  detail = fmt("%g/10000 pass", static_cast<double>(pass));
  return pass == sweeps;
}

bool criterion5(std::string& detail) {
  const int sweeps = 1000;
  std::int64_t pass = 0;
  std::int64_t skipped = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : pass, skipped) schedule(dynamic, 4)
#endif
  for (int i = 0; i < sweeps; ++i) {
    Rng rng(derive_seed(505, 1, static_cast<std::uint64_t>(i)));
    const int n = 1 + static_cast<int>(rng.below(32));
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
    for (auto& c : coeffs) c = Complex{rng.normal(), rng.normal()};
    const Polynomial p(std::move(coeffs));
    const Complex center{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const double radius = rng.log_uniform(0.1, 2.0);
    try {
      if (jensen_bound(p, center, radius).ok) ++pass;
    } catch (const NumericalError&) {
      ++skipped;
    }
  }
  detail = fmt("%g pass, %g skipped (vanishing inner max)", static_cast<double>(pass),
               static_cast<double>(skipped));
  return pass + skipped == sweeps;
}

bool criterion6(std::string& detail) {
  const int sweeps = 1000;
  std::int64_t certified = 0;
  std::int64_t violations = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : certified, violations) schedule(dynamic, 4)
#endif
  for (int i = 0; i < sweeps; ++i) {
    Rng rng(derive_seed(606, 1, static_cast<std::uint64_t>(i)));
    const int n = 2 + static_cast<int>(rng.below(15));
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
    for (auto& c : coeffs) {
      c = std::polar(std::exp(6.0 * rng.normal()), rng.uniform(0.0, 2.0 * kPi));
    }
    const Polynomial p(std::move(coeffs));
    const double t = rng.uniform(-2.0, 2.0);
    const ZeroFreeCertificate cert = zero_free_circle(p, t);
    if (!cert.certified) continue;
    ++certified;
    const double circle = std::exp(-2.0 * kPi * t);
    const RootSet roots = all_roots(p);
    for (const Complex& z : roots.roots()) {
      if (std::abs(std::abs(z) - circle) <= 1e-9 * circle) ++violations;
    }
  }
  detail = fmt("%g certified, %g violations", static_cast<double>(certified),
               static_cast<double>(violations));
  return violations == 0 && certified > 0;
}

// --- criterion 7 ------------------------------------------------------------

bool criterion7(std::string& detail) {
  const int sweeps = 500;
  std::int64_t flagged = 0;
  std::int64_t mismatches = 0;
  std::int64_t vieta_failures = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : flagged, mismatches, vieta_failures) \
    schedule(dynamic, 4)
#endif
  for (int i = 0; i < sweeps; ++i) {
    Rng rng(derive_seed(707, 1, static_cast<std::uint64_t>(i)));
    const int n = 2 + static_cast<int>(rng.below(63));
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
    for (auto& c : coeffs) c = Complex{rng.normal(), 0.0};
    if (coeffs.front() == Complex{}) coeffs.front() = Complex{0.5, 0.0};
    if (coeffs.back() == Complex{}) coeffs.back() = Complex{0.5, 0.0};
    const Polynomial p(std::move(coeffs));

    const int exact = count_real(p);
    const RootSet roots = all_roots(p);

    const Complex lead = p.coeff(n);
    const Complex sum_expect = -p.coeff(n - 1) / lead;
    Complex prod_expect = p.coeff(0) / lead;
    if (n % 2 == 1) prod_expect = -prod_expect;
    if (std::abs(roots.sum() - sum_expect) > 1e-6 * (1.0 + std::abs(sum_expect)) ||
        std::abs(roots.product() - prod_expect) > 1e-6 * (1.0 + std::abs(prod_expect))) {
      ++vieta_failures;
    }

    int near_real = 0;
    bool flag = false;
    for (const Complex& z : roots.roots()) {
      const double scale = 1.0 + std::abs(z);
      if (std::abs(z.imag()) < 1e-7 * scale) ++near_real;
      if (std::abs(z.imag()) >= 1e-9 * scale && std::abs(z.imag()) < 1e-6 * scale) flag = true;
    }
    if (flag) {
      ++flagged;
    } else if (exact != near_real) {
      ++mismatches;
    }
  }
  detail = fmt("%g flagged, %g mismatches, %g Vieta failures", static_cast<double>(flagged),
               static_cast<double>(mismatches), static_cast<double>(vieta_failures));
  return mismatches == 0 && vieta_failures == 0;
}

// --- criterion 8 ------------------------------------------------------------

bool criterion8(std::string& detail) {
  // Closed form: turan_ratio(1 - e^{it}, [-eps, eps]) = sin(eps/2).
  const ExpPolynomial family =
      make_exp_polynomial({{Complex{1.0, 0.0}, 0}, {Complex{-1.0, 0.0}, 1}});
  for (double eps : {0.2, 0.1, 0.05}) {
    const double measured = turan_ratio(family, {-eps, eps});
    if (std::abs(measured - std::sin(eps / 2.0)) > 1e-6) {
      detail = fmt("closed form off at eps=%.2f: %.8f", eps, measured);
      return false;
    }
  }

  Rng rng(808);
  const std::vector<double> lengths = {0.4, 0.2, 0.1};
  const auto table = estimate_turan_b(2, lengths, 50, rng);
  for (const TuranEstimate& row : table) {
    if (!(row.b_emp > 0.0 && row.b_emp <= 1.0)) {
      detail = fmt("b_emp out of range: %.6f", row.b_emp);
      return false;
    }
  }
  // Self-consistency: 1000 fresh random two-term sums never beat the minimum.
  for (const TuranEstimate& row : table) {
    const Interval interval{0.0, row.interval_length};
    const double floor = row.b_emp * row.interval_length * (1.0 - 1e-9);
    for (int rep = 0; rep < 1000; ++rep) {
      std::vector<ExpTerm> terms = {{Complex{rng.normal(), rng.normal()}, 0},
                                    {Complex{rng.normal(), rng.normal()}, 1}};
      const ExpPolynomial p = make_exp_polynomial(std::move(terms));
      if (p.coeff_l1() < 1e-6) continue;
      if (turan_ratio(p, interval) < floor) {
        detail = fmt("fresh sample beats the minimum at |I|=%.2f", row.interval_length);
        return false;
      }
    }
  }
  detail = fmt("b_emp(0.4)=%.4f, b_emp(0.2)=%.4f, b_emp(0.1)=%.4f", table[0].b_emp,
               table[1].b_emp, table[2].b_emp);
  return true;
}

// --- criterion 9 ------------------------------------------------------------

bool criterion9(std::string& detail) {
  const int sweeps = 1000;
  std::int64_t pass = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : pass) schedule(dynamic, 4)
#endif
  for (int i = 0; i < sweeps; ++i) {
    Rng rng(derive_seed(909, 1, static_cast<std::uint64_t>(i)));
    const int pairs = 1 + static_cast<int>(rng.below(128));  // 2..256 atoms
    std::vector<Complex> atoms(static_cast<std::size_t>(2 * pairs));
    for (auto& a : atoms) a = Complex{3.0 * rng.normal(), 3.0 * rng.normal()};
    const GreedyPairing gp = greedy_pairing(atoms);
    if (check_theta(gp.pairs, gp.center, 0.5).ok) ++pass;
  }
  detail = fmt("%g/1000 atom sets pass", static_cast<double>(pass));
  return pass == sweeps;
}

// --- criterion 10 -----------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return "<missing:" + p.string() + ">";
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool files_equal(const fs::path& a, const fs::path& b) { return slurp(a) == slurp(b); }

bool criterion10(std::string& detail) {
  const fs::path base = fs::temp_directory_path() / "polyzero_acceptance_det";
  fs::remove_all(base);
  const fs::path dir_a = base / "a";
  const fs::path dir_b = base / "b";
  fs::create_directories(dir_a);
  fs::create_directories(dir_b);

  bool ok = true;
  if (!cli_path.empty()) {
    const std::string common =
        " theorem1 --n 32 --trials 300 --seed 424242 >/dev/null 2>&1";
    const std::string cmd_a = cli_path + common + " --out " + dir_a.string();
    const std::string cmd_b = cli_path + common + " --out " + dir_b.string();
    ok = std::system(cmd_a.c_str()) == 0 && std::system(cmd_b.c_str()) == 0;
    detail = "via CLI binary";
  } else {
    ExperimentConfig cfg;
    cfg.model.magnitudes = {MagnitudeKind::kGaussian, 1.0};
    cfg.model.n = 32;
    cfg.trials = 300;
    cfg.master_seed = 424242;
    run_theorem1(cfg, dir_a);
    run_theorem1(cfg, dir_b);
    detail = "via library drivers";
  }
  ok = ok && files_equal(dir_a / "theorem1_trials.csv", dir_b / "theorem1_trials.csv") &&
       files_equal(dir_a / "theorem1_summary.json", dir_b / "theorem1_summary.json");

  // Theorem-2 reports must also be byte-stable.
  FlipModel model;
  model.pairs.assign(9, {Complex{1.0, 0.0}, Complex{-1.0, 0.0}});
  const Theorem2Report r1 =
      theorem2_experiment(model, 1.0, {0.0, 1.0}, 2, std::vector<double>{});
  const Theorem2Report r2 =
      theorem2_experiment(model, 1.0, {0.0, 1.0}, 2, std::vector<double>{});
  const std::string j1 = theorem2_report_to_json(r1).dump(2);
  const std::string j2 = theorem2_report_to_json(r2).dump(2);
  ok = ok && j1 == j2;

  fs::remove_all(base);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
  }

  criterion(1, "corollary mean-V bound", 30.0, criterion1);
  criterion(2, "exhaustive sign-flip failure fraction", 60.0, criterion2);
  criterion(3, "ratio-statistic stability in n", 300.0, criterion3);
  criterion(4, "S(r, (1-z)P) lower bound sweep", 0.0, criterion4);
  criterion(5, "Jensen disk-count certificate", 0.0, criterion5);
  criterion(6, "zero-free circle soundness", 0.0, criterion6);
  criterion(7, "Sturm/Aberth cross-validation", 0.0, criterion7);
  criterion(8, "Turan ratio closed form and b estimate", 0.0, criterion8);
  criterion(9, "greedy pairing theta property", 0.0, criterion9);
  criterion(10, "byte-identical reruns", 0.0, criterion10);

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
