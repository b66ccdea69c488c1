#include "polyzero/sturm.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyzero {

namespace {

// Dense integer polynomial, little-endian coefficients.
struct ZPoly {
  std::vector<mpz_class> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.size() == 1 && c[0] == 0; }

  void trim() {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
  }
};

ZPoly z_derivative(const ZPoly& p) {
  if (p.c.size() == 1) return ZPoly{{mpz_class(0)}};
  ZPoly d;
  d.c.resize(p.c.size() - 1);
  for (std::size_t k = 1; k < p.c.size(); ++k) {
    d.c[k - 1] = p.c[k] * static_cast<unsigned long>(k);
  }
  d.trim();
  return d;
}

// Exact conversion of the double coefficients into integers scaled by a
// common power of two (every finite double is m * 2^e).
ZPoly to_integer_poly(const Polynomial& p) {
  std::vector<mpq_class> q;
  q.reserve(p.coeffs().size());
  mpz_class common_den = 1;
  for (const Complex& coeff : p.coeffs()) {
    q.emplace_back(coeff.real());
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), q.back().get_den_mpz_t());
  }
  ZPoly out;
  out.c.reserve(q.size());
  for (const mpq_class& v : q) {
    mpz_class scale;
    mpz_divexact(scale.get_mpz_t(), common_den.get_mpz_t(), v.get_den_mpz_t());
    out.c.emplace_back(v.get_num() * scale);
  }
  out.trim();
  return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
ZPoly prem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  const int db = b.deg();
  const mpz_class& lb = b.c[static_cast<std::size_t>(db)];
  int e = a.deg() - db + 1;
  while (!r.is_zero() && r.deg() >= db) {
    const int dr = r.deg();
    const mpz_class lr = r.c[static_cast<std::size_t>(dr)];
    ZPoly next;
    next.c.assign(static_cast<std::size_t>(std::max(dr, 1)), mpz_class(0));
    for (int i = 0; i < dr; ++i) {
      mpz_class v = lb * r.c[static_cast<std::size_t>(i)];
      const int j = i - (dr - db);
      if (j >= 0 && j < db) v -= lr * b.c[static_cast<std::size_t>(j)];
      next.c[static_cast<std::size_t>(i)] = std::move(v);
    }
    next.trim();
    r = std::move(next);
    --e;
  }
  if (e > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& coeff : r.c) coeff *= f;
  }
  return r;
}

mpz_class pow_z(const mpz_class& base, int e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

// Sturm chain p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i). Coefficient
// growth is controlled with the subresultant pseudo-remainder sequence; after
// each exact division the sign is corrected so that every stored member is a
// positive integer multiple of the true chain member. The last member is
// gcd(p, p') up to a constant factor.
std::vector<ZPoly> sturm_chain(ZPoly p0, ZPoly p1) {
  std::vector<ZPoly> chain;
  chain.push_back(std::move(p0));
  if (chain[0].deg() == 0 || p1.is_zero()) return chain;
  chain.push_back(std::move(p1));

  int delta = chain[0].deg() - chain[1].deg();
  mpz_class beta = (delta % 2 == 0) ? mpz_class(-1) : mpz_class(1);  // (-1)^(delta+1)
  mpz_class psi = -1;

  while (true) {
    const ZPoly& a = chain[chain.size() - 2];
    const ZPoly& b = chain.back();
    ZPoly r = prem(a, b);
    if (r.is_zero()) break;

    ZPoly next;
    next.c.resize(r.c.size());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      mpz_divexact(next.c[i].get_mpz_t(), r.c[i].get_mpz_t(), beta.get_mpz_t());
    }

    // next = kappa * (-rem(a, b)) with
    // sign(kappa) = -sign(lc(b))^(delta+1) * sign(beta); make kappa > 0.
    int kappa_sign = -mpz_sgn(beta.get_mpz_t());
    if ((delta + 1) % 2 == 1 && mpz_sgn(b.c.back().get_mpz_t()) < 0) {
      kappa_sign = -kappa_sign;
    }
    if (kappa_sign < 0) {
      for (auto& coeff : next.c) coeff = -coeff;
    }

    // Subresultant bookkeeping (signs only change stored members by a unit,
    // which does not affect exact divisibility).
    const mpz_class lc_prev = b.c.back();
    if (delta == 0) {
      // psi unchanged
    } else if (delta == 1) {
      psi = -lc_prev;
    } else {
      mpz_class num = pow_z(-lc_prev, delta);
      mpz_class den = pow_z(psi, delta - 1);
      mpz_divexact(psi.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    const int delta_next = b.deg() - next.deg();
    beta = -lc_prev * pow_z(psi, delta_next);
    delta = delta_next;

    chain.push_back(std::move(next));
    if (chain.back().deg() == 0) break;
  }
  return chain;
}

// Sign of p at the rational point x (exact; a double is a dyadic rational).
int sign_at(const ZPoly& p, const mpq_class& x) {
  const int d = p.deg();
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = p.c[static_cast<std::size_t>(d)];
  mpz_class den_pow = 1;
  for (int i = d - 1; i >= 0; --i) {
    den_pow *= den;
    acc *= num;
    acc += p.c[static_cast<std::size_t>(i)] * den_pow;
  }
  return mpz_sgn(acc.get_mpz_t());
}

int variations(const std::vector<ZPoly>& chain, const mpq_class& x) {
  int count = 0;
  int prev = 0;
  for (const ZPoly& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

double nudge(double x, double toward, int ulps) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, toward);
  return x;
}

// Endpoints where the polynomial vanishes are nudged outward by 8 ulps.
int distinct_from_chain(const std::vector<ZPoly>& chain, double a, double b) {
  mpq_class qa(a);
  int guard = 0;
  while (sign_at(chain[0], qa) == 0) {
    a = nudge(a, -std::numeric_limits<double>::infinity(), 8);
    qa = mpq_class(a);
    if (++guard > 128) throw std::domain_error("sturm_count: cannot clear left endpoint");
  }
  mpq_class qb(b);
  guard = 0;
  while (sign_at(chain[0], qb) == 0) {
    b = nudge(b, std::numeric_limits<double>::infinity(), 8);
    qb = mpq_class(b);
    if (++guard > 128) throw std::domain_error("sturm_count: cannot clear right endpoint");
  }
  return variations(chain, qa) - variations(chain, qb);
}

void require_real(const Polynomial& p, const char* who) {
  if (!p.has_real_coeffs()) {
    throw std::domain_error(std::string(who) + " requires real coefficients");
  }
}

double cauchy_radius(const Polynomial& p) {
  const double lead = std::abs(p.coeffs().back());
  double m = 0.0;
  for (const Complex& c : p.coeffs()) m = std::max(m, std::abs(c));
  return 1.0 + m / lead;
}

}  // namespace

int sturm_count(const Polynomial& p, double a, double b) {
  require_real(p, "sturm_count");
  if (p.is_zero()) throw std::domain_error("sturm_count of the zero polynomial");
  if (!(a < b)) throw std::domain_error("sturm_count requires a < b");
  ZPoly zp = to_integer_poly(p);
  if (zp.deg() == 0) return 0;
  const std::vector<ZPoly> chain = sturm_chain(zp, z_derivative(zp));
  return distinct_from_chain(chain, a, b);
}

int count_real_distinct(const Polynomial& p) {
  require_real(p, "count_real_distinct");
  if (p.is_zero()) throw std::domain_error("count_real_distinct of the zero polynomial");
  const double r = cauchy_radius(p);
  return sturm_count(p, -r, r);
}

int count_real(const Polynomial& p) {
  require_real(p, "count_real");
  if (p.is_zero() || p.coeffs().back() == Complex{}) {
    throw std::domain_error("count_real requires a nonzero leading coefficient");
  }
  const double r = cauchy_radius(p);
  ZPoly g = to_integer_poly(p);
  int total = 0;
  // A root of multiplicity m is a root of p, gcd(p, p'), gcd(gcd, gcd'), ...
  // m levels deep, so summing distinct counts over the tower counts
  // multiplicity. Square-free inputs stop after one level.
  while (g.deg() >= 1) {
    const std::vector<ZPoly> chain = sturm_chain(g, z_derivative(g));
    total += distinct_from_chain(chain, -r, r);
    const ZPoly& last = chain.back();
    if (last.deg() == 0) break;
    g = last;
  }
  return total;
}

}  // namespace polyzero
