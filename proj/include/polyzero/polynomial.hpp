#pragma once

#include <complex>
#include <vector>

namespace polyzero {

using Complex = std::complex<double>;

// Dense univariate polynomial P(z) = sum_k coeffs[k] z^k with complex
// coefficients. Immutable after construction; coefficients must be finite.
// With nondegenerate = true the constructor additionally requires
// lambda_0 != 0 and lambda_n != 0 (no zero at the origin, degree does not
// drop).
class Polynomial {
 public:
  explicit Polynomial(std::vector<Complex> coeffs, bool nondegenerate = false);

  static Polynomial from_real(const std::vector<double>& coeffs,
                              bool nondegenerate = false);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  bool nondegenerate() const { return nondegenerate_; }

  bool has_real_coeffs() const;
  bool is_zero() const;
  // Smallest index with a nonzero coefficient; -1 for the zero polynomial.
  int lowest_nonzero() const;

 private:
  std::vector<Complex> coeffs_;
  bool nondegenerate_ = false;
};

// Horner evaluation, highest degree first.
Complex eval(const Polynomial& p, Complex z);

Polynomial derivative(const Polynomial& p);

// Majorant S(r, P) = sum_k |lambda_k| r^k. Throws std::domain_error for
// r <= 0. May overflow to +inf for huge r; callers guard.
double s_majorant(const Polynomial& p, double r);

// h(t) = max over nonzero lambda_k of (log|lambda_k| - 2 pi k t).
// Zero coefficients are skipped (log 0 = -inf convention).
double h_function(const Polynomial& p, double t);

// H(t) = exp(h(t)) = max_k |lambda_k| e^{-2 pi k t}.
double dominant_majorant(const Polynomial& p, double t);

// Central index: the largest nu attaining the maximum in h(t).
int central_index(const Polynomial& p, double t);

// P*(z) = z^n P(1/z): the coefficient sequence reversed.
Polynomial reverse(const Polynomial& p);

// P_bar(z) = (1 - z) P(z); degree n+1.
Polynomial bar_transform(const Polynomial& p);

// View of P under the substitution z = exp(-2 pi w), w = t + i s:
// Q(w) = sum_k lambda_k e^{-2 pi k w}.
struct ExpPolynomialView {
  Polynomial base;
};

Complex exp_eval(const ExpPolynomialView& q, Complex w);

}  // namespace polyzero
