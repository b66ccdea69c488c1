#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "polyzero/aberth.hpp"
#include "polyzero/polynomial.hpp"

namespace polyzero {

// Curve r -> r e^{i theta(r)} in polar coordinates with
// |theta(r1) - theta(r2)| <= L |log(r1/r2)|. Parametrized on r in (0, inf);
// the origin is excluded.
class LipschitzCurve {
 public:
  LipschitzCurve(std::function<double(double)> theta, double lipschitz,
                 std::string description);

  double theta(double r) const { return theta_(r); }
  double lipschitz() const { return lipschitz_; }
  const std::string& description() const { return description_; }

  // Ray at a fixed angle (L = 0). The real axis is the union of ray(0) and
  // ray(pi).
  static LipschitzCurve ray(double angle);
  // theta(r) = L log r, the extremal Lipschitz case.
  static LipschitzCurve log_spiral(double lipschitz);
  // Piecewise-linear in (log r, theta); constant beyond the table range.
  // Entries are (r, theta) with strictly increasing r > 0.
  static LipschitzCurve from_table(std::vector<std::pair<double, double>> r_theta);

 private:
  std::function<double(double)> theta_;
  double lipschitz_ = 0.0;
  std::string description_;
};

struct CurveCount {
  int count = 0;
  // Root clusters whose angular distance landed in (tol, 10 tol]: too far to
  // count, too close to dismiss.
  std::vector<RootCluster> ambiguous;
};

// Number of zeros on the curve, counted with cluster multiplicity: a root
// rho e^{i phi} counts when the circular distance between phi and theta(rho)
// is at most tol * (1 + L).
CurveCount count_on_curve(const RootSet& roots, const LipschitzCurve& curve, double tol);
CurveCount count_on_curve(const Polynomial& p, const LipschitzCurve& curve, double tol);

}  // namespace polyzero
