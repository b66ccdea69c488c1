#pragma once

#include <span>
#include <vector>

#include "polyzero/polynomial.hpp"

namespace polyzero {

struct HullPoint {
  double x = 0.0;
  double y = 0.0;
};

// Upper convex envelope of points with strictly increasing x. Returns indices
// of the hull vertices in input order. Collinear interior points are dropped:
// a middle point survives only if it lies strictly above the chord of its
// neighbours by more than a relative tolerance, so exact ties collapse to the
// outer pair.
std::vector<std::size_t> upper_hull(std::span<const HullPoint> points);

// Vertex structure of t -> max_k (log|lambda_k| + k t): the upper hull of
// the points (k, log|lambda_k|) over nonzero coefficients. breakpoint_radii
// are the radii where the dominant index changes,
// r_j = (|lambda_{k_{j-1}}| / |lambda_{k_j}|)^{1/(k_j - k_{j-1})}.
struct NewtonHadamardPolygon {
  std::vector<int> vertex_indices;       // k_0 < k_1 < ... < k_{V-1}
  std::vector<double> breakpoint_radii;  // r_1 < ... < r_{V-1}
  int vertex_count() const { return static_cast<int>(vertex_indices.size()); }
};

// Requires a nonzero leading coefficient. Zero coefficients are excluded from
// the point set.
NewtonHadamardPolygon polygon(const Polynomial& p);

int vertex_count(const Polynomial& p);

// 2 * (1 + 1/2 + ... + 1/n); requires n >= 1.
double harmonic_v_bound(int n);

// One radius per root: the breakpoint radius of each hull edge repeated by
// the edge's horizontal span. Requires lambda_0 != 0 and lambda_n != 0; the
// result has exactly deg(p) entries and seeds the simultaneous root finder.
std::vector<double> initial_root_radii(const Polynomial& p);

}  // namespace polyzero
