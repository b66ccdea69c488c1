#include "polyzero/theta_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polyzero/common.hpp"

namespace polyzero {

SignSequence SignSequence::from_index(int n, std::uint64_t index) {
  SignSequence s;
  s.signs.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    // sigma_0 is the most significant bit so that index order is
    // lexicographic in (sigma_0, ..., sigma_n) with '+' < '-'.
    const int bit = static_cast<int>((index >> (n - k)) & 1u);
    s.signs[static_cast<std::size_t>(k)] = bit ? -1 : 1;
  }
  return s;
}

SignSequence SignSequence::random(int n, Rng& rng) {
  SignSequence s;
  s.signs.resize(static_cast<std::size_t>(n) + 1);
  for (auto& v : s.signs) v = static_cast<std::int8_t>(rng.sign());
  return s;
}

ThetaCheck check_theta(std::span<const std::pair<Complex, Complex>> pairs, Complex a,
                       double kappa) {
  if (!(kappa > 0.0 && kappa <= 1.0)) throw std::domain_error("check_theta requires kappa in (0, 1]");
  ThetaCheck out;
  out.worst_margin = std::numeric_limits<double>::infinity();
  for (const auto& [plus, minus] : pairs) {
    const double margin =
        std::abs(plus - minus) - kappa * (std::abs(plus - a) + std::abs(minus - a));
    out.worst_margin = std::min(out.worst_margin, margin);
  }
  out.ok = out.worst_margin >= 0.0;
  return out;
}

ThetaCheck check_theta(const FlipModel& model) {
  return check_theta(model.pairs, model.center, model.kappa);
}

GreedyPairing greedy_pairing(std::span<const Complex> atoms) {
  if (atoms.size() < 2 || atoms.size() % 2 != 0) {
    throw std::domain_error("greedy_pairing requires an even number of atoms >= 2");
  }
  std::vector<Complex> remaining(atoms.begin(), atoms.end());
  GreedyPairing out;
  out.pairs.reserve(atoms.size() / 2);
  while (remaining.size() > 2) {
    std::size_t bi = 0, bj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i + 1 < remaining.size(); ++i) {
      for (std::size_t j = i + 1; j < remaining.size(); ++j) {
        const double d = std::abs(remaining[i] - remaining[j]);
        if (d > best) {  // ties keep the smallest index pair
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    out.pairs.emplace_back(remaining[bi], remaining[bj]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(bj));
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(bi));
  }
  out.pairs.emplace_back(remaining[0], remaining[1]);
  out.center = 0.5 * (remaining[0] + remaining[1]);

  const ThetaCheck check = check_theta(out.pairs, out.center, 0.5);
  if (!check.ok) {
    // The geometric argument makes this impossible up to rounding; a tiny
    // negative margin can only come from floating point.
    if (check.worst_margin < -1e-9) {
      throw NumericalError("greedy_pairing produced a pair violating the theta inequality");
    }
  }
  return out;
}

FlipModel make_median_model(std::span<const std::pair<double, double>> value_pairs,
                            double median, double kappa) {
  FlipModel model;
  model.center = Complex{median, 0.0};
  model.kappa = kappa;
  model.pairs.reserve(value_pairs.size());
  for (const auto& [lo, hi] : value_pairs) {
    const double mid = 0.5 * (lo + hi);
    const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
    if (std::abs(mid - median) > 1e-12 * scale) {
      throw ConfigError("median model pair is not symmetric about the common median");
    }
    model.pairs.emplace_back(Complex{hi, 0.0}, Complex{lo, 0.0});
  }
  return model;
}

Polynomial sample_flip(const FlipModel& model, const SignSequence& sigma) {
  if (sigma.signs.size() != model.pairs.size()) {
    throw std::domain_error("sign sequence length does not match the model");
  }
  std::vector<Complex> coeffs(model.pairs.size());
  for (std::size_t k = 0; k < model.pairs.size(); ++k) {
    coeffs[k] = sigma.signs[k] > 0 ? model.pairs[k].first : model.pairs[k].second;
  }
  return Polynomial(std::move(coeffs));
}

FlipEnumeration::FlipEnumeration(FlipModel model) : model_(std::move(model)) {
  if (model_.n() > 24) {
    throw ConfigError("exhaustive flip enumeration refuses n > 24 (2^(n+1) sequences)");
  }
  if (model_.pairs.empty()) throw ConfigError("flip enumeration needs at least one pair");
}

SignSequence FlipEnumeration::sigma(std::uint64_t index) const {
  return SignSequence::from_index(model_.n(), index);
}

Polynomial FlipEnumeration::polynomial(std::uint64_t index) const {
  return sample_flip(model_, sigma(index));
}

namespace {

class SymmetricSampler final : public ModelSampler {
 public:
  SymmetricSampler(MagnitudeSpec spec, int n, double kappa)
      : spec_(spec), n_(n), kappa_(kappa) {
    if (n < 1) throw ConfigError("symmetric model requires n >= 1");
    if (spec.kind == MagnitudeKind::kLogNormal && !(spec.param > 0.0)) {
      throw ConfigError("lognormal magnitudes need a positive sigma");
    }
  }

  FlipModel sample(Rng& rng) const override {
    FlipModel m;
    m.center = Complex{0.0, 0.0};
    m.kappa = kappa_;
    m.pairs.reserve(static_cast<std::size_t>(n_) + 1);
    for (int k = 0; k <= n_; ++k) {
      const double v = draw(rng);
      m.pairs.emplace_back(Complex{v, 0.0}, Complex{-v, 0.0});
    }
    return m;
  }

  int n() const override { return n_; }

  bool iid_continuous_magnitudes() const override {
    return spec_.kind != MagnitudeKind::kRademacher;
  }

 private:
  double draw(Rng& rng) const {
    switch (spec_.kind) {
      case MagnitudeKind::kRademacher:
        return 1.0;
      case MagnitudeKind::kUniform01:
        return rng.uniform01();
      case MagnitudeKind::kGaussian:
        return rng.normal();
      case MagnitudeKind::kLogNormal:
        return std::exp(spec_.param * rng.normal());
    }
    return 1.0;
  }

  MagnitudeSpec spec_;
  int n_;
  double kappa_;
};

class IidAtomsSampler final : public ModelSampler {
 public:
  IidAtomsSampler(std::vector<Complex> atoms, int n, double kappa) : n_(n), kappa_(kappa) {
    if (n < 1) throw ConfigError("atom model requires n >= 1");
    if (atoms.size() < 2 || atoms.size() % 2 != 0) {
      throw ConfigError("atom model needs an even number of atoms >= 2");
    }
    pairing_ = greedy_pairing(atoms);
  }

  FlipModel sample(Rng& rng) const override {
    FlipModel m;
    m.center = pairing_.center;
    m.kappa = kappa_;
    m.pairs.reserve(static_cast<std::size_t>(n_) + 1);
    for (int k = 0; k <= n_; ++k) {
      const auto& pair = pairing_.pairs[rng.below(pairing_.pairs.size())];
      // A uniform orientation keeps (lambda^+, lambda^-) exchangeable, so
      // the first coordinate alone is uniform over all atoms.
      if (rng.sign() > 0) {
        m.pairs.emplace_back(pair.first, pair.second);
      } else {
        m.pairs.emplace_back(pair.second, pair.first);
      }
    }
    return m;
  }

  int n() const override { return n_; }
  bool iid_continuous_magnitudes() const override { return false; }

 private:
  GreedyPairing pairing_;
  int n_;
  double kappa_;
};

class FixedSampler final : public ModelSampler {
 public:
  explicit FixedSampler(FlipModel model) : model_(std::move(model)) {
    if (model_.pairs.empty()) throw ConfigError("fixed model needs at least one pair");
  }
  FlipModel sample(Rng&) const override { return model_; }
  int n() const override { return model_.n(); }
  bool iid_continuous_magnitudes() const override { return false; }

 private:
  FlipModel model_;
};

}  // namespace

std::unique_ptr<ModelSampler> make_symmetric_model(MagnitudeSpec magnitudes, int n,
                                                   double kappa) {
  return std::make_unique<SymmetricSampler>(magnitudes, n, kappa);
}

std::unique_ptr<ModelSampler> make_iid_atoms_model(std::vector<Complex> atoms, int n,
                                                   double kappa) {
  return std::make_unique<IidAtomsSampler>(std::move(atoms), n, kappa);
}

std::unique_ptr<ModelSampler> make_fixed_model(FlipModel model) {
  return std::make_unique<FixedSampler>(std::move(model));
}

}  // namespace polyzero
