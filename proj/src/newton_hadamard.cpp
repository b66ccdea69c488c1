#include "polyzero/newton_hadamard.hpp"

#include <cmath>
#include <stdexcept>

namespace polyzero {

namespace {

// Cross product (a - o) x (b - o). Negative means a strict right turn, i.e.
// the middle point lies strictly above the chord o--b.
double cross(const HullPoint& o, const HullPoint& a, const HullPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double turn_tolerance(const HullPoint& o, const HullPoint& a, const HullPoint& b) {
  const double span_x = b.x - o.x;
  double my = 1.0;
  for (double y : {o.y, a.y, b.y}) my = std::max(my, std::abs(y));
  return 1e-12 * std::max(span_x, 1.0) * my;
}

}  // namespace

std::vector<std::size_t> upper_hull(std::span<const HullPoint> points) {
  if (points.empty()) throw std::domain_error("upper_hull needs at least one point");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x)) {
      throw std::domain_error("upper_hull requires strictly increasing x");
    }
  }
  std::vector<std::size_t> hull;
  hull.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    while (hull.size() >= 2) {
      const HullPoint& o = points[hull[hull.size() - 2]];
      const HullPoint& a = points[hull.back()];
      const HullPoint& b = points[i];
      if (cross(o, a, b) >= -turn_tolerance(o, a, b)) {
        hull.pop_back();  // collinear or below the chord
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  return hull;
}

NewtonHadamardPolygon polygon(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("polygon of the zero polynomial");
  if (p.coeffs().back() == Complex{}) {
    throw std::domain_error("polygon requires a nonzero leading coefficient");
  }
  std::vector<HullPoint> pts;
  std::vector<int> index_of;
  pts.reserve(p.coeffs().size());
  for (int k = 0; k <= p.degree(); ++k) {
    const Complex c = p.coeff(k);
    if (c == Complex{}) continue;
    pts.push_back({static_cast<double>(k), std::log(std::abs(c))});
    index_of.push_back(k);
  }
  const std::vector<std::size_t> hull = upper_hull(pts);

  NewtonHadamardPolygon out;
  out.vertex_indices.reserve(hull.size());
  for (std::size_t h : hull) out.vertex_indices.push_back(index_of[h]);
  for (std::size_t j = 1; j < hull.size(); ++j) {
    const HullPoint& a = pts[hull[j - 1]];
    const HullPoint& b = pts[hull[j]];
    const double slope = (b.y - a.y) / (b.x - a.x);
    out.breakpoint_radii.push_back(std::exp(-slope));
  }
  return out;
}

int vertex_count(const Polynomial& p) { return polygon(p).vertex_count(); }

double harmonic_v_bound(int n) {
  if (n < 1) throw std::domain_error("harmonic_v_bound requires n >= 1");
  double h = 0.0;
  for (int j = n; j >= 1; --j) h += 1.0 / static_cast<double>(j);
  return 2.0 * h;
}

std::vector<double> initial_root_radii(const Polynomial& p) {
  if (p.coeffs().front() == Complex{} || p.coeffs().back() == Complex{}) {
    throw std::domain_error("initial_root_radii requires lambda_0 != 0 and lambda_n != 0");
  }
  const NewtonHadamardPolygon poly = polygon(p);
  std::vector<double> radii;
  radii.reserve(static_cast<std::size_t>(p.degree()));
  for (std::size_t j = 1; j < poly.vertex_indices.size(); ++j) {
    const int span = poly.vertex_indices[j] - poly.vertex_indices[j - 1];
    for (int i = 0; i < span; ++i) radii.push_back(poly.breakpoint_radii[j - 1]);
  }
  return radii;
}

}  // namespace polyzero
