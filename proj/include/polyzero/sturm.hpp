#pragma once

#include "polyzero/polynomial.hpp"

namespace polyzero {

// Real-zero counting for real-coefficient polynomials. Double coefficients
// are scaled by a common power of two into exact integers and the Sturm chain
// is built over them with a subresultant remainder sequence, so the sign
// variation counts carry no rounding error.

// Number of distinct real roots in (a, b]; requires a < b and real
// coefficients. Endpoints where p vanishes are nudged outward by 8 ulps.
int sturm_count(const Polynomial& p, double a, double b);

// Distinct real roots on the whole line (Cauchy-bounded interval).
int count_real_distinct(const Polynomial& p);

// Total real zeros counted with multiplicity; multiplicities come from the
// gcd(p, p') tower. Requires real coefficients and lambda_n != 0.
int count_real(const Polynomial& p);

}  // namespace polyzero
