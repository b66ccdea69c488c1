#include "polyzero/curves.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyzero {

namespace {

double circular_distance(double a, double b) {
  const double two_pi = 2.0 * std::numbers::pi;
  double d = std::fmod(std::abs(a - b), two_pi);
  return std::min(d, two_pi - d);
}

}  // namespace

LipschitzCurve::LipschitzCurve(std::function<double(double)> theta, double lipschitz,
                               std::string description)
    : theta_(std::move(theta)), lipschitz_(lipschitz), description_(std::move(description)) {
  if (!(lipschitz_ >= 0.0)) throw std::domain_error("Lipschitz constant must be >= 0");
}

LipschitzCurve LipschitzCurve::ray(double angle) {
  return LipschitzCurve([angle](double) { return angle; }, 0.0,
                        "ray(theta=" + std::to_string(angle) + ")");
}

LipschitzCurve LipschitzCurve::log_spiral(double lipschitz) {
  return LipschitzCurve([lipschitz](double r) { return lipschitz * std::log(r); }, lipschitz,
                        "spiral(L=" + std::to_string(lipschitz) + ")");
}

LipschitzCurve LipschitzCurve::from_table(std::vector<std::pair<double, double>> r_theta) {
  if (r_theta.empty()) throw std::domain_error("curve table must be nonempty");
  std::vector<std::pair<double, double>> tab;  // (log r, theta)
  tab.reserve(r_theta.size());
  for (const auto& [r, th] : r_theta) {
    if (!(r > 0.0)) throw std::domain_error("curve table radii must be positive");
    if (!tab.empty() && !(std::log(r) > tab.back().first)) {
      throw std::domain_error("curve table radii must be strictly increasing");
    }
    tab.emplace_back(std::log(r), th);
  }
  double lipschitz = 0.0;
  for (std::size_t i = 1; i < tab.size(); ++i) {
    lipschitz = std::max(lipschitz, std::abs((tab[i].second - tab[i - 1].second) /
                                             (tab[i].first - tab[i - 1].first)));
  }
  auto theta = [tab](double r) {
    const double x = std::log(r);
    if (x <= tab.front().first) return tab.front().second;
    if (x >= tab.back().first) return tab.back().second;
    std::size_t i = 1;
    while (tab[i].first < x) ++i;
    const double t = (x - tab[i - 1].first) / (tab[i].first - tab[i - 1].first);
    return tab[i - 1].second + t * (tab[i].second - tab[i - 1].second);
  };
  return LipschitzCurve(std::move(theta), lipschitz, "table(" + std::to_string(tab.size()) + ")");
}

CurveCount count_on_curve(const RootSet& roots, const LipschitzCurve& curve, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("count_on_curve requires tol > 0");
  CurveCount out;
  const double threshold = tol * (1.0 + curve.lipschitz());
  for (const RootCluster& cluster : roots.clusters()) {
    const double rho = std::abs(cluster.center);
    if (rho == 0.0) continue;  // curves exclude the origin
    const double phi = std::arg(cluster.center);
    const double dist = circular_distance(phi, curve.theta(rho));
    if (dist <= threshold) {
      out.count += cluster.multiplicity;
    } else if (dist <= 10.0 * threshold) {
      out.ambiguous.push_back(cluster);
    }
  }
  return out;
}

CurveCount count_on_curve(const Polynomial& p, const LipschitzCurve& curve, double tol) {
  return count_on_curve(all_roots(p), curve, tol);
}

}  // namespace polyzero
