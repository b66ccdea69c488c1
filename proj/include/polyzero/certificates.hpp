#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "polyzero/common.hpp"
#include "polyzero/polynomial.hpp"
#include "polyzero/rng.hpp"
#include "polyzero/theta_model.hpp"

namespace polyzero {

// Exponential sum p(t) = sum_k a_k e^{i ell_k t} with distinct integer
// frequencies.
struct ExpTerm {
  Complex a;
  int ell = 0;
};

struct ExpPolynomial {
  std::vector<ExpTerm> terms;

  Complex eval(double t) const;
  double coeff_l1() const;  // sum |a_k|
  int term_count() const { return static_cast<int>(terms.size()); }
};

ExpPolynomial make_exp_polynomial(std::vector<ExpTerm> terms);  // checks distinct ells

// Grid density heuristic for sup-norm scans.
int default_grid_points(int m);

// Sup of f over I: a coarse equispaced grid followed by 3-point parabolic
// refinement (20 halving steps) around every local maximum. The result is
// never below the grid maximum.
double arc_max(const std::function<double(double)>& f, Interval interval, int grid_points);
double arc_max(const ExpPolynomial& p, Interval interval, int grid_points = 1024);
// max over theta in I of |P(r e^{i theta})|.
double arc_max(const Polynomial& p, double r, Interval interval, int grid_points = 1024);

// arc_max(p, I) / sum |a_k|; always <= 1, and >= (b |I|)^{m-1} for the
// universal Turan constant b.
double turan_ratio(const ExpPolynomial& p, Interval interval, int grid_points = 1024);

struct TuranEstimate {
  double interval_length = 0.0;
  double min_ratio = 0.0;
  double b_emp = 0.0;  // (min ratio)^{1/(m-1)} / |I|, an upper bound on the optimal b
};

// Minimizes turan_ratio over a seeded extremal family plus random draws with
// coordinate-wise local search (200 refinement steps per draw). Requires
// m >= 2 and trials >= 10.
std::vector<TuranEstimate> estimate_turan_b(int m, std::span<const double> interval_lengths,
                                            int trials, Rng& rng, int grid_points = 1024);

struct SbarCheck {
  double lhs = 0.0;  // S(r, (1-z)P)
  double rhs = 0.0;  // (1+r) / (2(n+1)) * S(r, P)
  bool ok = false;
};

SbarCheck sbar_check(const Polynomial& p, double r);

struct JensenCheck {
  double bound = 0.0;  // log(max_{|z-c|=R} |P| / max_{|z-c|=R/2} |P|) / log(5/4)
  int actual = 0;      // computed zeros in the closed half disk, with multiplicity
  bool ok = false;     // actual <= ceil(bound)
};

JensenCheck jensen_bound(const Polynomial& p, Complex center, double radius,
                         int grid_points = 2048);

struct ZeroFreeCertificate {
  bool certified = false;
  double margin = 0.0;  // min over k != nu of the inequality slack
};

// Central-term domination: with nu the central index at t, certified means
// log|lambda_nu| - 2 pi nu t >= log|lambda_k| - 2 pi k t + 2 pi |k - nu| for
// every other nonzero coefficient, which forces P != 0 on |z| = e^{-2 pi t}.
ZeroFreeCertificate zero_free_circle(const Polynomial& p, double t);

struct CertificateParams {
  int m = 2;
  Interval interval{0.0, 1.0};
  double r = 1.0;
  double c_candidate = 0.0;
  double b_candidate = 0.0;
  int grid_points = 0;  // 0 = default_grid_points(m)

  // Enforces |I| <= 2 pi and grid_points >= 64 (m + 1); throws ConfigError.
  void validate() const;
};

struct Theorem2Report {
  int n = 0;
  double r = 1.0;
  Interval interval{0.0, 1.0};
  int m = 2;
  int grid_points = 0;
  bool exhaustive = true;
  std::uint64_t total = 0;  // sign sequences evaluated
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  // Histogram of ratios over 64 log10 bins spanning [1e-16, 1]; the first and
  // last bins absorb underflow/overflow.
  std::array<std::uint64_t, 64> histogram{};
  std::vector<double> c_grid;
  std::vector<double> failure_fraction;  // f(c) = P{ratio <= n^-2 (c |I|)^{6m}}
  double c_star = 0.0;                   // largest grid c with f(c) <= 2^-m; 0 if none
  double f_at_c_star = 0.0;
  bool resolution_limit = false;  // fewer sequences than 2^m: only ~all-pass can satisfy
};

double theorem2_threshold(int n, double c, double interval_length, int m);

// Evaluates ratio(sigma) = arc_max(P_sigma, r, I) / S(r, P_sigma) over all
// 2^{n+1} sign sequences (n <= 24), or over Monte Carlo draws (>= 2^{m+10}
// samples) otherwise. workers = 1 forces the serial reference path. An
// explicitly given grid below 64 (m + 1) points is refused as too coarse.
Theorem2Report theorem2_experiment(const FlipModel& model, double r, Interval interval, int m,
                                   std::span<const double> c_grid, int grid_points = 0,
                                   int workers = 0, std::uint64_t mc_samples = 0,
                                   std::uint64_t seed = 0);

Theorem2Report theorem2_experiment(const FlipModel& model, const CertificateParams& params,
                                   std::span<const double> c_grid, int workers = 0,
                                   std::uint64_t mc_samples = 0, std::uint64_t seed = 0);

std::vector<double> default_c_grid();

}  // namespace polyzero
