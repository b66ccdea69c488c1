// Benchmark: OpenMP trial/enumeration kernels against the serial reference
// implementations. The serial path is the correctness baseline, so each
// comparison also asserts that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "polyzero/certificates.hpp"
#include "polyzero/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace polyzero;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool reports_equal(const std::vector<TrialReport>& a, const std::vector<TrialReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].seed != b[i].seed || a[i].v != b[i].v || a[i].n_real != b[i].n_real ||
        a[i].ratio != b[i].ratio || a[i].excluded != b[i].excluded) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  long trials = 400;
  int n = 64;
  int enum_n = 12;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--trials") trials = std::atol(argv[i + 1]);
    if (flag == "--n") n = std::atoi(argv[i + 1]);
    if (flag == "--enum-n") enum_n = std::atoi(argv[i + 1]);
  }

#ifdef _OPENMP
  std::printf("threads available: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both paths are serial\n");
#endif

  // Monte Carlo trials (vertex counts + exact real-zero counts).
  ExperimentConfig cfg;
  cfg.model.kind = ModelKind::kSymmetric;
  cfg.model.magnitudes = {MagnitudeKind::kRademacher, 1.0};
  cfg.model.n = n;
  cfg.trials = trials;
  cfg.master_seed = 1;

  auto t0 = std::chrono::steady_clock::now();
  const std::vector<TrialReport> serial = run_trials_serial(cfg);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const std::vector<TrialReport> parallel = run_trials_parallel(cfg, 0);
  const double t_parallel = seconds_since(t0);

  if (!reports_equal(serial, parallel)) {
    std::fprintf(stderr, "FAIL: parallel trial reports differ from the serial reference\n");
    return 1;
  }
  std::printf("trials (n=%d, %ld trials): serial %.3f s, openmp %.3f s, speedup %.2fx\n", n,
              trials, t_serial, t_parallel, t_serial / t_parallel);

  // Exhaustive sign-flip enumeration.
  FlipModel model;
  model.pairs.assign(static_cast<std::size_t>(enum_n) + 1,
                     {Complex{1.0, 0.0}, Complex{-1.0, 0.0}});

  t0 = std::chrono::steady_clock::now();
  const Theorem2Report r_serial =
      theorem2_experiment(model, 1.0, {0.0, 1.0}, 2, std::vector<double>{}, 0, /*workers=*/1);
  const double t2_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const Theorem2Report r_parallel =
      theorem2_experiment(model, 1.0, {0.0, 1.0}, 2, std::vector<double>{}, 0, /*workers=*/0);
  const double t2_parallel = seconds_since(t0);

  if (r_serial.histogram != r_parallel.histogram ||
      r_serial.failure_fraction != r_parallel.failure_fraction ||
      r_serial.c_star != r_parallel.c_star) {
    std::fprintf(stderr, "FAIL: parallel enumeration differs from the serial reference\n");
    return 1;
  }
  std::printf("enumeration (n=%d, %llu sequences): serial %.3f s, openmp %.3f s, speedup %.2fx\n",
              enum_n, static_cast<unsigned long long>(r_serial.total), t2_serial, t2_parallel,
              t2_serial / t2_parallel);

  std::printf("parallel outputs match the serial reference\n");
  return 0;
}
