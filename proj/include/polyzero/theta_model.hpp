#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "polyzero/polynomial.hpp"
#include "polyzero/rng.hpp"

namespace polyzero {

// A point of {+,-}^{n+1}; +1 selects lambda_k^+, -1 selects lambda_k^-.
struct SignSequence {
  std::vector<std::int8_t> signs;

  int n() const { return static_cast<int>(signs.size()) - 1; }

  // Lexicographic enumeration with '+' before '-': index 0 is all-plus.
  static SignSequence from_index(int n, std::uint64_t index);
  static SignSequence random(int n, Rng& rng);
};

// The reduced random model: independent coordinates, coefficient k uniform on
// {lambda_k^+, lambda_k^-}, with every pair far apart relative to a common
// center a:  |l+ - l-| >= kappa (|l+ - a| + |l- - a|).
struct FlipModel {
  std::vector<std::pair<Complex, Complex>> pairs;
  Complex center{0.0, 0.0};
  double kappa = 0.5;

  int n() const { return static_cast<int>(pairs.size()) - 1; }
};

struct ThetaCheck {
  bool ok = false;
  double worst_margin = 0.0;  // min_k (|l+ - l-| - kappa (|l+ - a| + |l- - a|))
};

ThetaCheck check_theta(std::span<const std::pair<Complex, Complex>> pairs, Complex a,
                       double kappa);
ThetaCheck check_theta(const FlipModel& model);

struct GreedyPairing {
  std::vector<std::pair<Complex, Complex>> pairs;  // extraction order
  Complex center;                                  // midpoint of the final pair
};

// Repeatedly extracts the pair at maximal distance from the remaining atoms;
// the center is the midpoint of the last surviving pair. Every produced pair
// satisfies check_theta with kappa = 1/2 (asserted). Ties break toward the
// smallest index pair. Requires an even atom count >= 2.
GreedyPairing greedy_pairing(std::span<const Complex> atoms);

// Real pairs straddling a common median: lambda_k^+ + lambda_k^- = 2 a.
FlipModel make_median_model(std::span<const std::pair<double, double>> value_pairs,
                            double median, double kappa = 0.5);

Polynomial sample_flip(const FlipModel& model, const SignSequence& sigma);

// Exhaustive walk over all 2^(n+1) sign sequences; refuses n > 24.
class FlipEnumeration {
 public:
  explicit FlipEnumeration(FlipModel model);

  std::uint64_t size() const { return std::uint64_t{1} << (model_.n() + 1); }
  SignSequence sigma(std::uint64_t index) const;
  Polynomial polynomial(std::uint64_t index) const;
  const FlipModel& model() const { return model_; }

 private:
  FlipModel model_;
};

// Per-trial model draws. Symmetric and atom models redraw the pair values
// each trial; fixed models return the same pairs every time.
class ModelSampler {
 public:
  virtual ~ModelSampler() = default;
  virtual FlipModel sample(Rng& rng) const = 0;
  virtual int n() const = 0;
  // True when the induced coefficient law is i.i.d. with a continuous
  // magnitude distribution (required by the mean-V experiment).
  virtual bool iid_continuous_magnitudes() const = 0;
};

enum class MagnitudeKind { kRademacher, kUniform01, kGaussian, kLogNormal };

struct MagnitudeSpec {
  MagnitudeKind kind = MagnitudeKind::kRademacher;
  double param = 1.0;  // lognormal sigma
};

// Pairs (v, -v) with |v| drawn per coefficient, center 0.
std::unique_ptr<ModelSampler> make_symmetric_model(MagnitudeSpec magnitudes, int n,
                                                   double kappa = 0.5);

// The i.i.d. atom construction: greedy pairing fixes the pair table and the
// center once; each trial independently picks one table pair per coefficient.
std::unique_ptr<ModelSampler> make_iid_atoms_model(std::vector<Complex> atoms, int n,
                                                   double kappa = 0.5);

std::unique_ptr<ModelSampler> make_fixed_model(FlipModel model);

}  // namespace polyzero
