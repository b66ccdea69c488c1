#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polyzero/polynomial.hpp"

namespace polyzero {

struct RootCluster {
  Complex center;
  int multiplicity = 1;
};

// All n roots of a polynomial with their residuals. residual[i] is
// |P(z_i)| / S(|z_i|, P), the relative backward error of the evaluation.
// Roots closer than 1e-7 * (1 + |z|) merge into clusters carrying summed
// multiplicity (at double precision a multiple root scatters into a cluster
// of about that size).
class RootSet {
 public:
  RootSet(std::vector<Complex> roots, std::vector<double> residuals);

  const std::vector<Complex>& roots() const { return roots_; }
  const std::vector<double>& residuals() const { return residuals_; }
  const std::vector<RootCluster>& clusters() const { return clusters_; }
  int size() const { return static_cast<int>(roots_.size()); }

  Complex sum() const;
  Complex product() const;

 private:
  std::vector<Complex> roots_;
  std::vector<double> residuals_;
  std::vector<RootCluster> clusters_;
};

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, RootSet best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const RootSet& best() const { return best_; }

 private:
  RootSet best_;
};

// Aberth-Ehrlich simultaneous iteration seeded from the Newton-Hadamard
// polygon radii, followed by two Newton polish steps. Converged when every
// Newton correction drops below 1e-13 * (1 + |z|) or the evaluation reaches
// its backward-error noise floor. Throws RootFindingError with the best
// iterate after max_iters sweeps.
RootSet all_roots(const Polynomial& p, int max_iters = 500);

}  // namespace polyzero
