#include "polyzero/aberth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "polyzero/newton_hadamard.hpp"

namespace polyzero {

namespace {

constexpr double kCorrectionTol = 1e-13;

double cluster_radius(Complex z) { return 1e-7 * (1.0 + std::abs(z)); }

std::vector<RootCluster> build_clusters(const std::vector<Complex>& roots) {
  const int n = static_cast<int>(roots.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (roots[a].real() != roots[b].real()) return roots[a].real() < roots[b].real();
    return roots[a].imag() < roots[b].imag();
  });

  // Single-linkage merge via union-find on pairs within the cluster radius.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Complex a = roots[order[i]];
      const Complex b = roots[order[j]];
      if (b.real() - a.real() > cluster_radius(a)) break;  // sorted by Re
      if (std::abs(a - b) <= std::min(cluster_radius(a), cluster_radius(b))) {
        parent[find(order[i])] = find(order[j]);
      }
    }
  }

  std::vector<RootCluster> clusters;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int idx : order) {
    const int root = find(idx);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(clusters.size());
      clusters.push_back({Complex{}, 0});
    }
    RootCluster& c = clusters[slot[root]];
    c.center += roots[idx];
    c.multiplicity += 1;
  }
  for (RootCluster& c : clusters) c.center /= static_cast<double>(c.multiplicity);
  return clusters;
}

struct EvalPair {
  Complex newton;  // P(z) / P'(z)
  bool newton_valid = true;
};

// Newton correction, overflow-safe: for |z| > 1 the reversed polynomial is
// used, P(z) = z^n P*(1/z), so no power of z beyond z^1 is ever formed.
EvalPair newton_step(const std::vector<Complex>& c, const std::vector<Complex>& rc, Complex z) {
  const std::size_t n = c.size() - 1;
  EvalPair out;
  if (std::abs(z) <= 1.0) {
    Complex p = c[n];
    Complex dp = Complex{};
    for (std::size_t k = n; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + c[k];
    }
    if (dp == Complex{}) {
      out.newton_valid = false;
    } else {
      out.newton = p / dp;
    }
    return out;
  }
  const Complex u = 1.0 / z;
  Complex ps = rc[n];
  Complex dps = Complex{};
  for (std::size_t k = n; k-- > 0;) {
    dps = dps * u + ps;
    ps = ps * u + rc[k];
  }
  // P(z) = z^n P*(u); P'(z) = z^{n-1} (n P*(u) - u P*'(u))
  const Complex denom = static_cast<double>(n) * ps - u * dps;
  if (denom == Complex{}) {
    out.newton_valid = false;
  } else {
    out.newton = z * ps / denom;
  }
  return out;
}

// Relative residual |P(z)| / S(|z|, P), computed from the same side of the
// reversal as the evaluation to avoid overflow.
double relative_residual(const Polynomial& p, const Polynomial& prev, Complex z) {
  const double az = std::abs(z);
  if (az <= 1.0) {
    return std::abs(eval(p, z)) / s_majorant(p, std::max(az, 1e-300));
  }
  // |P(z)| / S(|z|, P) = |P*(u)| / S(u, P*) with u = 1/z
  const Complex u = 1.0 / z;
  return std::abs(eval(prev, u)) / s_majorant(prev, std::abs(u));
}

}  // namespace

RootSet::RootSet(std::vector<Complex> roots, std::vector<double> residuals)
    : roots_(std::move(roots)), residuals_(std::move(residuals)) {
  clusters_ = build_clusters(roots_);
}

Complex RootSet::sum() const {
  Complex s{};
  for (const Complex& z : roots_) s += z;
  return s;
}

Complex RootSet::product() const {
  Complex p{1.0, 0.0};
  for (const Complex& z : roots_) p *= z;
  return p;
}

RootSet all_roots(const Polynomial& p, int max_iters) {
  if (p.degree() < 1) throw std::domain_error("all_roots requires degree >= 1");
  if (p.coeffs().back() == Complex{}) {
    throw std::domain_error("all_roots requires a nonzero leading coefficient");
  }

  // Roots at the origin split off exactly.
  const int low = p.lowest_nonzero();
  std::vector<Complex> work(p.coeffs().begin() + low, p.coeffs().end());
  const Polynomial q(std::move(work));
  const int d = q.degree();

  std::vector<Complex> roots;
  std::vector<double> residuals;
  roots.reserve(static_cast<std::size_t>(p.degree()));
  residuals.reserve(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < low; ++i) {
    roots.emplace_back(0.0, 0.0);
    residuals.push_back(0.0);
  }
  if (d == 0) return RootSet(std::move(roots), std::move(residuals));

  const Polynomial qrev = reverse(q);
  const auto& c = q.coeffs();
  const auto& rc = qrev.coeffs();

  // Initial points: polygon radii with equispaced-plus-jitter angles.
  const std::vector<double> radii = initial_root_radii(q);
  std::vector<Complex> z(static_cast<std::size_t>(d));
  {
    std::size_t i = 0;
    while (i < z.size()) {
      std::size_t j = i;
      while (j < z.size() && radii[j] == radii[i]) ++j;
      const std::size_t group = j - i;
      for (std::size_t k = 0; k < group; ++k) {
        const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) /
                                 static_cast<double>(group) +
                             0.4 + 0.9 * static_cast<double>(i) +
                             0.003 * static_cast<double>(k);
        z[i + k] = std::polar(radii[i], angle);
      }
      i = j;
    }
  }

  // Noise floor of Horner evaluation: below ~n * eps * S(|z|) the computed
  // value is indistinguishable from zero, which is where multiple roots stall.
  const double noise_floor = 4.0 * static_cast<double>(d) * 2.220446049250313e-16;

  std::vector<bool> frozen(static_cast<std::size_t>(d), false);
  bool converged = false;
  for (int iter = 0; iter < max_iters && !converged; ++iter) {
    converged = true;
    for (int i = 0; i < d; ++i) {
      if (frozen[static_cast<std::size_t>(i)]) continue;
      const EvalPair ev = newton_step(c, rc, z[static_cast<std::size_t>(i)]);
      if (!ev.newton_valid) {
        // P'(z) vanished (or the reversed denominator did); deterministic kick.
        Complex& zi = z[static_cast<std::size_t>(i)];
        zi = (zi == Complex{}) ? Complex{1e-3, 1e-3} : zi * Complex{1.0 + 1e-6, 1e-6};
        converged = false;
        continue;
      }
      const double scale = 1.0 + std::abs(z[static_cast<std::size_t>(i)]);
      if (std::abs(ev.newton) < kCorrectionTol * scale ||
          relative_residual(q, qrev, z[static_cast<std::size_t>(i)]) < noise_floor) {
        frozen[static_cast<std::size_t>(i)] = true;
        continue;
      }
      converged = false;
      Complex aberth_sum{};
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        const Complex diff = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
        if (diff == Complex{}) continue;
        aberth_sum += 1.0 / diff;
      }
      const Complex denom = 1.0 - ev.newton * aberth_sum;
      const Complex step = (denom == Complex{}) ? ev.newton : ev.newton / denom;
      z[static_cast<std::size_t>(i)] -= step;
    }
  }

  // Two Newton polish steps, accepted only when they reduce the residual.
  for (int i = 0; i < d; ++i) {
    for (int step = 0; step < 2; ++step) {
      const EvalPair ev = newton_step(c, rc, z[static_cast<std::size_t>(i)]);
      if (!ev.newton_valid) break;
      const Complex candidate = z[static_cast<std::size_t>(i)] - ev.newton;
      if (relative_residual(q, qrev, candidate) <
          relative_residual(q, qrev, z[static_cast<std::size_t>(i)])) {
        z[static_cast<std::size_t>(i)] = candidate;
      } else {
        break;
      }
    }
  }

  for (int i = 0; i < d; ++i) {
    roots.push_back(z[static_cast<std::size_t>(i)]);
    residuals.push_back(relative_residual(q, qrev, z[static_cast<std::size_t>(i)]));
  }
  RootSet result(std::move(roots), std::move(residuals));
  if (!converged) {
    throw RootFindingError("all_roots: no convergence after " + std::to_string(max_iters) +
                               " iterations",
                           std::move(result));
  }
  return result;
}

}  // namespace polyzero
