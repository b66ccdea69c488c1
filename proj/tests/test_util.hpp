#pragma once

#include <cmath>
#include <vector>

#include "polyzero/polynomial.hpp"
#include "polyzero/rng.hpp"

namespace polyzero::test {

inline Polynomial random_complex_poly(Rng& rng, int degree, double scale = 1.0) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = Complex{scale * rng.uniform(-1.0, 1.0), scale * rng.uniform(-1.0, 1.0)};
  if (c.front() == Complex{}) c.front() = Complex{0.5, 0.0};
  if (c.back() == Complex{}) c.back() = Complex{0.5, 0.0};
  return Polynomial(std::move(c));
}

inline Polynomial random_gaussian_real_poly(Rng& rng, int degree) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = Complex{rng.normal(), 0.0};
  if (c.front() == Complex{}) c.front() = Complex{0.5, 0.0};
  if (c.back() == Complex{}) c.back() = Complex{0.5, 0.0};
  return Polynomial(std::move(c));
}

// Power-sum evaluation; the independent oracle for Horner.
inline Complex naive_eval(const Polynomial& p, Complex z) {
  Complex acc{};
  Complex zk{1.0, 0.0};
  for (const Complex& c : p.coeffs()) {
    acc += c * zk;
    zk *= z;
  }
  return acc;
}

}  // namespace polyzero::test
