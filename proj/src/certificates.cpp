#include "polyzero/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

#include "polyzero/aberth.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polyzero {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Complex ExpPolynomial::eval(double t) const {
  Complex acc{};
  for (const ExpTerm& term : terms) {
    acc += term.a * std::polar(1.0, static_cast<double>(term.ell) * t);
  }
  return acc;
}

double ExpPolynomial::coeff_l1() const {
  double s = 0.0;
  for (const ExpTerm& term : terms) s += std::abs(term.a);
  return s;
}

ExpPolynomial make_exp_polynomial(std::vector<ExpTerm> terms) {
  if (terms.empty()) throw std::domain_error("exponential sum needs at least one term");
  std::set<int> ells;
  for (const ExpTerm& t : terms) {
    if (!ells.insert(t.ell).second) {
      throw std::domain_error("exponential sum frequencies must be distinct");
    }
  }
  return ExpPolynomial{std::move(terms)};
}

int default_grid_points(int m) { return std::max(1024, 64 * (m + 1)); }

namespace {

// One local refinement: 20 parabolic/hill-climb steps with halving bracket,
// clamped to the interval. Never returns less than the starting value.
double refine_peak(const std::function<double(double)>& f, Interval interval, double t,
                   double h, double ft) {
  double ct = t;
  double cv = ft;
  double best = ft;
  const double neg_inf = -std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 20; ++iter) {
    const double tl = ct - h;
    const double tr = ct + h;
    const double yl = interval.contains(tl) ? f(tl) : neg_inf;
    const double yr = interval.contains(tr) ? f(tr) : neg_inf;
    if (yl > cv || yr > cv) {
      if (yl >= yr) {
        ct = tl;
        cv = yl;
      } else {
        ct = tr;
        cv = yr;
      }
      best = std::max(best, cv);
    } else if (interval.contains(tl) && interval.contains(tr)) {
      const double denom = yl - 2.0 * cv + yr;
      if (denom < 0.0) {
        double cand = ct + 0.5 * h * (yl - yr) / denom;
        cand = std::clamp(cand, tl, tr);
        const double yc = f(cand);
        if (yc > cv) {
          ct = cand;
          cv = yc;
          best = std::max(best, yc);
        }
      }
    }
    h *= 0.5;
  }
  return best;
}

}  // namespace

double arc_max(const std::function<double(double)>& f, Interval interval, int grid_points) {
  if (grid_points < 2) throw std::domain_error("arc_max needs at least 2 grid points");
  if (!(interval.length() >= 0.0)) throw std::domain_error("arc_max needs a valid interval");
  if (interval.length() == 0.0) return f(interval.lo);

  const int g = grid_points;
  const double step = interval.length() / static_cast<double>(g - 1);
  std::vector<double> values(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    values[static_cast<std::size_t>(i)] = f(interval.lo + step * static_cast<double>(i));
  }

  double best = values[0];
  for (int i = 0; i < g; ++i) {
    const double v = values[static_cast<std::size_t>(i)];
    best = std::max(best, v);
    const bool left_ok = (i == 0) || values[static_cast<std::size_t>(i - 1)] <= v;
    const bool right_ok = (i == g - 1) || values[static_cast<std::size_t>(i + 1)] <= v;
    if (left_ok && right_ok) {
      const double t = interval.lo + step * static_cast<double>(i);
      best = std::max(best, refine_peak(f, interval, t, step, v));
    }
  }
  return best;
}

double arc_max(const ExpPolynomial& p, Interval interval, int grid_points) {
  if (p.terms.empty()) throw std::domain_error("arc_max of an empty exponential sum");
  if (interval.length() > kTwoPi + 1e-12) {
    throw std::domain_error("arc_max interval must have length <= 2 pi");
  }
  return arc_max([&p](double t) { return std::abs(p.eval(t)); }, interval, grid_points);
}

double arc_max(const Polynomial& p, double r, Interval interval, int grid_points) {
  if (!(r > 0.0)) throw std::domain_error("arc_max requires r > 0");
  if (interval.length() > kTwoPi + 1e-12) {
    throw std::domain_error("arc_max interval must have length <= 2 pi");
  }
  return arc_max(
      [&p, r](double theta) { return std::abs(eval(p, std::polar(r, theta))); }, interval,
      grid_points);
}

double turan_ratio(const ExpPolynomial& p, Interval interval, int grid_points) {
  const double l1 = p.coeff_l1();
  if (l1 == 0.0) throw std::domain_error("turan_ratio of the zero sum");
  return arc_max(p, interval, grid_points) / l1;
}

namespace {

// Near-extremal seed: (1 - e^{i (t - center)})^{m-1}, the m-term sum whose
// zero sits mid-interval.
ExpPolynomial turan_seed(int m, double center) {
  std::vector<ExpTerm> terms;
  terms.reserve(static_cast<std::size_t>(m));
  double binom = 1.0;
  for (int j = 0; j < m; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    terms.push_back({sign * binom * std::polar(1.0, -static_cast<double>(j) * center), j});
    binom = binom * static_cast<double>(m - 1 - j) / static_cast<double>(j + 1);
  }
  return ExpPolynomial{std::move(terms)};
}

ExpPolynomial random_exp_polynomial(int m, Rng& rng) {
  // Random distinct frequencies in [0, 4m); coefficients complex Gaussian.
  std::vector<int> freqs;
  while (static_cast<int>(freqs.size()) < m) {
    const int f = static_cast<int>(rng.below(static_cast<std::uint64_t>(4 * m)));
    if (std::find(freqs.begin(), freqs.end(), f) == freqs.end()) freqs.push_back(f);
  }
  std::vector<ExpTerm> terms;
  terms.reserve(static_cast<std::size_t>(m));
  for (int f : freqs) terms.push_back({Complex{rng.normal(), rng.normal()}, f});
  return ExpPolynomial{std::move(terms)};
}

double local_search_min_ratio(ExpPolynomial p, Interval interval, int grid_points, Rng& rng) {
  double best = turan_ratio(p, interval, grid_points);
  const int m = p.term_count();
  double step = 0.25;
  for (int iter = 0; iter < 200; ++iter) {
    const int term = iter % m;
    const int coord = (iter / m) % 2;
    const double scale = step * (std::abs(p.terms[static_cast<std::size_t>(term)].a) + 0.1);
    const double delta = scale * (rng.uniform01() - 0.5) * 2.0;
    ExpPolynomial trial = p;
    Complex& a = trial.terms[static_cast<std::size_t>(term)].a;
    a += (coord == 0) ? Complex{delta, 0.0} : Complex{0.0, delta};
    if (trial.coeff_l1() < 1e-8) continue;
    const double r = turan_ratio(trial, interval, grid_points);
    if (r < best) {
      best = r;
      p = std::move(trial);
    } else {
      step *= 0.99;
    }
  }
  return best;
}

}  // namespace

std::vector<TuranEstimate> estimate_turan_b(int m, std::span<const double> interval_lengths,
                                            int trials, Rng& rng, int grid_points) {
  if (m < 2) throw ConfigError("estimate_turan_b requires m >= 2");
  if (trials < 10) throw ConfigError("estimate_turan_b requires at least 10 trials");
  std::vector<TuranEstimate> table;
  table.reserve(interval_lengths.size());
  for (double len : interval_lengths) {
    if (!(len > 0.0 && len <= kTwoPi)) {
      throw ConfigError("turan interval lengths must lie in (0, 2 pi]");
    }
    const Interval interval{0.0, len};
    double min_ratio = turan_ratio(turan_seed(m, interval.midpoint()), interval, grid_points);
    min_ratio = std::min(min_ratio, local_search_min_ratio(turan_seed(m, interval.midpoint()),
                                                           interval, grid_points, rng));
    for (int t = 0; t < trials; ++t) {
      min_ratio = std::min(min_ratio, local_search_min_ratio(random_exp_polynomial(m, rng),
                                                             interval, grid_points, rng));
    }
    TuranEstimate row;
    row.interval_length = len;
    row.min_ratio = min_ratio;
    row.b_emp = std::pow(min_ratio, 1.0 / static_cast<double>(m - 1)) / len;
    table.push_back(row);
  }
  return table;
}

SbarCheck sbar_check(const Polynomial& p, double r) {
  SbarCheck out;
  const int n = p.degree();
  out.lhs = s_majorant(bar_transform(p), r);
  out.rhs = (1.0 + r) / (2.0 * static_cast<double>(n + 1)) * s_majorant(p, r);
  out.ok = out.lhs >= out.rhs * (1.0 - 1e-12);
  return out;
}

JensenCheck jensen_bound(const Polynomial& p, Complex center, double radius, int grid_points) {
  if (!(radius > 0.0)) throw std::domain_error("jensen_bound requires radius > 0");
  const Interval full_circle{-std::numbers::pi, std::numbers::pi};
  auto circle_max = [&](double rho) {
    return arc_max(
        [&](double theta) { return std::abs(eval(p, center + std::polar(rho, theta))); },
        full_circle, grid_points);
  };
  const double outer = circle_max(radius);
  const double inner = circle_max(0.5 * radius);
  if (inner < 1e-300) {
    throw NumericalError("jensen_bound: polynomial numerically vanishing on the inner circle");
  }

  JensenCheck out;
  out.bound = std::log(outer / inner) / std::log(1.25);
  out.actual = 0;
  if (p.degree() >= 1) {
    const RootSet roots = all_roots(p);
    for (const Complex& z : roots.roots()) {
      if (std::abs(z - center) <= 0.5 * radius * (1.0 + 1e-12)) ++out.actual;
    }
  }
  out.ok = out.actual <= static_cast<int>(std::ceil(out.bound));
  return out;
}

ZeroFreeCertificate zero_free_circle(const Polynomial& p, double t) {
  const int nu = central_index(p, t);
  const double lhs = std::log(std::abs(p.coeff(nu))) - kTwoPi * static_cast<double>(nu) * t;
  ZeroFreeCertificate out;
  out.margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= p.degree(); ++k) {
    if (k == nu || p.coeff(k) == Complex{}) continue;
    const double rhs = std::log(std::abs(p.coeff(k))) - kTwoPi * static_cast<double>(k) * t +
                       kTwoPi * std::abs(static_cast<double>(k - nu));
    out.margin = std::min(out.margin, lhs - rhs);
  }
  out.certified = out.margin >= 0.0;
  return out;
}

double theorem2_threshold(int n, double c, double interval_length, int m) {
  return std::pow(static_cast<double>(n), -2.0) *
         std::pow(c * interval_length, 6.0 * static_cast<double>(m));
}

std::vector<double> default_c_grid() {
  // 64 log-spaced values covering [1e-4, 10].
  std::vector<double> grid(64);
  const double lo = std::log(1e-4);
  const double hi = std::log(10.0);
  for (int i = 0; i < 64; ++i) {
    grid[static_cast<std::size_t>(i)] =
        std::exp(lo + (hi - lo) * static_cast<double>(i) / 63.0);
  }
  return grid;
}

void CertificateParams::validate() const {
  if (m < 1) throw ConfigError("certificate params require m >= 1");
  if (!(interval.length() > 0.0 && interval.length() <= kTwoPi)) {
    throw ConfigError("certificate interval must have length in (0, 2 pi]");
  }
  if (!(r > 0.0)) throw ConfigError("certificate params require r > 0");
  if (grid_points != 0 && grid_points < 64 * (m + 1)) {
    throw ConfigError("certificate grid is too coarse: need at least 64 (m + 1) points");
  }
}

Theorem2Report theorem2_experiment(const FlipModel& model, const CertificateParams& params,
                                   std::span<const double> c_grid, int workers,
                                   std::uint64_t mc_samples, std::uint64_t seed) {
  return theorem2_experiment(model, params.r, params.interval, params.m, c_grid,
                             params.grid_points, workers, mc_samples, seed);
}

Theorem2Report theorem2_experiment(const FlipModel& model, double r, Interval interval, int m,
                                   std::span<const double> c_grid, int grid_points, int workers,
                                   std::uint64_t mc_samples, std::uint64_t seed) {
  CertificateParams params;
  params.m = m;
  params.interval = interval;
  params.r = r;
  params.grid_points = grid_points;
  params.validate();

  Theorem2Report report;
  report.n = model.n();
  report.r = r;
  report.interval = interval;
  report.m = m;
  report.grid_points = grid_points > 0 ? grid_points : default_grid_points(m);
  report.exhaustive = model.n() <= 24;

  std::uint64_t total = 0;
  if (report.exhaustive) {
    total = std::uint64_t{1} << (model.n() + 1);
  } else {
    const std::uint64_t needed = std::uint64_t{1} << (m + 10);
    total = mc_samples == 0 ? needed : mc_samples;
    if (total < needed) {
      throw ConfigError("theorem2_experiment Monte Carlo needs >= 2^(m+10) samples");
    }
  }
  report.total = total;

  std::vector<double> ratios(total);
  const auto evaluate = [&](std::uint64_t idx) {
    const SignSequence sigma =
        report.exhaustive ? SignSequence::from_index(model.n(), idx) : [&] {
          Rng rng(derive_seed(seed, 0x7e02u, idx));
          return SignSequence::random(model.n(), rng);
        }();
    const Polynomial p = sample_flip(model, sigma);
    const double majorant = s_majorant(p, r);
    if (majorant == 0.0) {
      ratios[idx] = 0.0;
      return;
    }
    ratios[idx] = arc_max(p, r, interval, report.grid_points) / majorant;
  };

  if (workers == 1) {
    for (std::uint64_t idx = 0; idx < total; ++idx) evaluate(idx);
  } else {
#ifdef _OPENMP
    const int threads = workers > 1 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
      evaluate(static_cast<std::uint64_t>(idx));
    }
#else
    for (std::uint64_t idx = 0; idx < total; ++idx) evaluate(idx);
#endif
  }

  report.min_ratio = ratios[0];
  report.max_ratio = ratios[0];
  for (double v : ratios) {
    report.min_ratio = std::min(report.min_ratio, v);
    report.max_ratio = std::max(report.max_ratio, v);
  }
  for (double v : ratios) {
    // 64 bins over log10 in [-16, 0]; 4 bins per decade.
    int bin = 0;
    if (v > 0.0) {
      bin = static_cast<int>(std::floor((std::log10(v) + 16.0) * 4.0));
      bin = std::clamp(bin, 0, 63);
    }
    report.histogram[static_cast<std::size_t>(bin)] += 1;
  }

  std::vector<double> grid(c_grid.begin(), c_grid.end());
  if (grid.empty()) grid = default_c_grid();
  std::sort(grid.begin(), grid.end());
  report.c_grid = grid;
  report.failure_fraction.reserve(grid.size());

  std::vector<double> sorted_ratios = ratios;
  std::sort(sorted_ratios.begin(), sorted_ratios.end());
  const double pass_level = std::pow(2.0, -static_cast<double>(m));
  report.c_star = 0.0;
  report.f_at_c_star = 0.0;
  for (double c : grid) {
    const double threshold = theorem2_threshold(report.n, c, interval.length(), m);
    const auto it = std::upper_bound(sorted_ratios.begin(), sorted_ratios.end(), threshold);
    const double f = static_cast<double>(it - sorted_ratios.begin()) /
                     static_cast<double>(total);
    report.failure_fraction.push_back(f);
    if (f <= pass_level && c > report.c_star) {
      report.c_star = c;
      report.f_at_c_star = f;
    }
  }
  report.resolution_limit =
      static_cast<double>(total) * pass_level <= 1.0 + 1e-12;
  return report;
}

}  // namespace polyzero
