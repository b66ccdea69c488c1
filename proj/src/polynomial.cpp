#include "polyzero/polynomial.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace polyzero {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }
}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs, bool nondegenerate)
    : coeffs_(std::move(coeffs)), nondegenerate_(nondegenerate) {
  if (coeffs_.empty()) throw std::domain_error("polynomial needs at least one coefficient");
  for (const Complex& c : coeffs_) {
    if (!finite(c)) throw std::domain_error("polynomial coefficients must be finite");
  }
  if (nondegenerate_) {
    if (coeffs_.front() == Complex{}) {
      throw std::domain_error("nondegenerate polynomial must not vanish at the origin");
    }
    if (coeffs_.back() == Complex{}) {
      throw std::domain_error("nondegenerate polynomial must have a nonzero leading coefficient");
    }
  }
}

Polynomial Polynomial::from_real(const std::vector<double>& coeffs, bool nondegenerate) {
  std::vector<Complex> c;
  c.reserve(coeffs.size());
  for (double x : coeffs) c.emplace_back(x, 0.0);
  return Polynomial(std::move(c), nondegenerate);
}

bool Polynomial::has_real_coeffs() const {
  for (const Complex& c : coeffs_) {
    if (c.imag() != 0.0) return false;
  }
  return true;
}

bool Polynomial::is_zero() const {
  for (const Complex& c : coeffs_) {
    if (c != Complex{}) return false;
  }
  return true;
}

int Polynomial::lowest_nonzero() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != Complex{}) return static_cast<int>(k);
  }
  return -1;
}

Complex eval(const Polynomial& p, Complex z) {
  const auto& c = p.coeffs();
  Complex acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() == 1) return Polynomial({Complex{}});
  std::vector<Complex> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
  return Polynomial(std::move(d));
}

double s_majorant(const Polynomial& p, double r) {
  if (!(r > 0.0)) throw std::domain_error("s_majorant requires r > 0");
  double sum = 0.0;
  double rk = 1.0;
  for (const Complex& c : p.coeffs()) {
    sum += std::abs(c) * rk;
    rk *= r;
  }
  return sum;
}

double h_function(const Polynomial& p, double t) {
  if (p.is_zero()) throw std::domain_error("h_function of the zero polynomial");
  double best = -std::numeric_limits<double>::infinity();
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == Complex{}) continue;
    best = std::max(best, std::log(std::abs(c[k])) - kTwoPi * static_cast<double>(k) * t);
  }
  return best;
}

double dominant_majorant(const Polynomial& p, double t) { return std::exp(h_function(p, t)); }

int central_index(const Polynomial& p, double t) {
  if (p.is_zero()) throw std::domain_error("central_index of the zero polynomial");
  double best = -std::numeric_limits<double>::infinity();
  int arg = -1;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == Complex{}) continue;
    const double value = std::log(std::abs(c[k])) - kTwoPi * static_cast<double>(k) * t;
    if (value >= best) {  // ties break upward: the largest index wins
      best = value;
      arg = static_cast<int>(k);
    }
  }
  return arg;
}

Polynomial reverse(const Polynomial& p) {
  std::vector<Complex> c(p.coeffs().rbegin(), p.coeffs().rend());
  return Polynomial(std::move(c));
}

Polynomial bar_transform(const Polynomial& p) {
  const auto& c = p.coeffs();
  std::vector<Complex> out(c.size() + 1);
  out[0] = c[0];
  for (std::size_t k = 1; k < c.size(); ++k) out[k] = c[k] - c[k - 1];
  out[c.size()] = -c.back();
  return Polynomial(std::move(out));
}

Complex exp_eval(const ExpPolynomialView& q, Complex w) {
  return eval(q.base, std::exp(-kTwoPi * w));
}

}  // namespace polyzero
