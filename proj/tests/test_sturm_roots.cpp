#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polyzero/aberth.hpp"
#include "polyzero/curves.hpp"
#include "polyzero/rng.hpp"
#include "polyzero/sturm.hpp"
#include "test_util.hpp"

using namespace polyzero;
using polyzero::test::random_gaussian_real_poly;

TEST_CASE("sturm_count basics") {
  const Polynomial p1 = Polynomial::from_real({-1, 0, 1});  // x^2 - 1
  CHECK(sturm_count(p1, -2.0, 2.0) == 2);
  CHECK(sturm_count(p1, 0.0, 2.0) == 1);

  CHECK(sturm_count(Polynomial::from_real({1, 0, 1}), -10.0, 10.0) == 0);  // x^2 + 1

  // (x - 1)^2: one distinct root; multiplicity recovered by count_real.
  const Polynomial sq = Polynomial::from_real({1, -2, 1});
  CHECK(sturm_count(sq, 0.0, 2.0) == 1);
  CHECK(count_real(sq) == 2);

  CHECK_THROWS_AS(sturm_count(p1, 2.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(sturm_count(Polynomial({Complex{0.0, 1.0}}), -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(sturm_count(Polynomial::from_real({0.0}), -1.0, 1.0), std::domain_error);
}

TEST_CASE("count_real basics") {
  CHECK(count_real(Polynomial::from_real({-1, 0, 1})) == 2);
  CHECK(count_real(Polynomial::from_real({0, -1, 0, 1})) == 3);  // x^3 - x
  CHECK(count_real(Polynomial::from_real({1, 0, 1})) == 0);
  CHECK(count_real(Polynomial::from_real({5})) == 0);
  // (x - 1)^3 has one distinct root of multiplicity 3.
  CHECK(count_real(Polynomial::from_real({-1, 3, -3, 1})) == 3);
  // (x - 1)^2 (x + 2) = x^3 - 3x + 2
  CHECK(count_real(Polynomial::from_real({2, -3, 0, 1})) == 3);
}

TEST_CASE("count_real is reversal-invariant") {
  Rng rng(301);
  for (int rep = 0; rep < 50; ++rep) {
    const Polynomial p = random_gaussian_real_poly(rng, 2 + static_cast<int>(rng.below(24)));
    CHECK(count_real(p) == count_real(reverse(p)));
  }
}

TEST_CASE("all_roots hand examples") {
  {
    const RootSet roots = all_roots(Polynomial::from_real({1, 0, 1}));  // z^2 + 1
    REQUIRE(roots.size() == 2);
    std::vector<Complex> sorted = roots.roots();
    std::sort(sorted.begin(), sorted.end(),
              [](Complex a, Complex b) { return a.imag() < b.imag(); });
    CHECK(std::abs(sorted[0] - Complex{0.0, -1.0}) <= 1e-10);
    CHECK(std::abs(sorted[1] - Complex{0.0, 1.0}) <= 1e-10);
  }
  {
    const RootSet roots = all_roots(Polynomial::from_real({-6, 1, 1}));  // {2, -3}
    std::vector<Complex> sorted = roots.roots();
    std::sort(sorted.begin(), sorted.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    CHECK(std::abs(sorted[0] - Complex{-3.0, 0.0}) <= 1e-10);
    CHECK(std::abs(sorted[1] - Complex{2.0, 0.0}) <= 1e-10);
  }
  CHECK_THROWS_AS(all_roots(Polynomial::from_real({1.0})), std::domain_error);
  CHECK_THROWS_AS(all_roots(Polynomial::from_real({1.0, 0.0})), std::domain_error);
}

TEST_CASE("all_roots residuals and Vieta") {
  Rng rng(302);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 2 + static_cast<int>(rng.below(31));
    const Polynomial p = random_gaussian_real_poly(rng, n);
    const RootSet roots = all_roots(p);
    REQUIRE(roots.size() == n);

    for (double res : roots.residuals()) CHECK(res <= 1e-8);

    const Complex lead = p.coeff(n);
    const Complex sum_expect = -p.coeff(n - 1) / lead;
    CHECK(std::abs(roots.sum() - sum_expect) <= 1e-6 * (1.0 + std::abs(sum_expect)));

    Complex prod_expect = p.coeff(0) / lead;
    if (n % 2 == 1) prod_expect = -prod_expect;
    CHECK(std::abs(roots.product() - prod_expect) <= 1e-6 * (1.0 + std::abs(prod_expect)));

    int mult_total = 0;
    for (const RootCluster& c : roots.clusters()) mult_total += c.multiplicity;
    CHECK(mult_total == n);
  }
}

TEST_CASE("all_roots handles multiple roots and origin roots") {
  {
    // (z - 1)^2
    const RootSet roots = all_roots(Polynomial::from_real({1, -2, 1}));
    REQUIRE(roots.clusters().size() == 1);
    CHECK(roots.clusters()[0].multiplicity == 2);
    CHECK(std::abs(roots.clusters()[0].center - Complex{1.0, 0.0}) <= 1e-6);
  }
  {
    // z^3 (z - 2): origin root of multiplicity 3.
    const RootSet roots = all_roots(Polynomial::from_real({0, 0, 0, -2, 1}));
    REQUIRE(roots.size() == 4);
    int at_origin = 0;
    for (const Complex& z : roots.roots()) {
      if (std::abs(z) == 0.0) ++at_origin;
    }
    CHECK(at_origin == 3);
  }
}

TEST_CASE("sturm and aberth agree on real-root counts") {
  Rng rng(303);
  int flagged = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(rng.below(31));
    const Polynomial p = random_gaussian_real_poly(rng, n);
    const int exact = count_real(p);
    const RootSet roots = all_roots(p);
    int near_real = 0;
    bool flag = false;
    for (const Complex& z : roots.roots()) {
      const double scale = 1.0 + std::abs(z);
      if (std::abs(z.imag()) < 1e-7 * scale) ++near_real;
      const double im = std::abs(z.imag());
      if (im >= 1e-9 * scale && im < 1e-6 * scale) flag = true;
    }
    if (flag) {
      ++flagged;  // report, don't fail
      continue;
    }
    CHECK(exact == near_real);
  }
  MESSAGE("flagged near-axis instances: ", flagged);
}

TEST_CASE("lipschitz curves") {
  const LipschitzCurve spiral = LipschitzCurve::log_spiral(2.0);
  const LipschitzCurve table = LipschitzCurve::from_table({{0.1, 0.0}, {1.0, 1.0}, {10.0, 0.5}});
  Rng rng(304);
  for (const LipschitzCurve* curve : {&spiral, &table}) {
    for (int rep = 0; rep < 200; ++rep) {
      const double r1 = rng.log_uniform(1e-3, 1e3);
      const double r2 = rng.log_uniform(1e-3, 1e3);
      CHECK(std::abs(curve->theta(r1) - curve->theta(r2)) <=
            curve->lipschitz() * std::abs(std::log(r1 / r2)) + 1e-9);
    }
  }
  CHECK(spiral.theta(std::exp(1.0)) == doctest::Approx(2.0));
  CHECK_THROWS_AS(LipschitzCurve::from_table({{1.0, 0.0}, {0.5, 1.0}}), std::domain_error);
}

TEST_CASE("count_on_curve hand examples") {
  const Polynomial p = Polynomial::from_real({-6, 1, 1});  // roots {2, -3}
  const LipschitzCurve positive_axis = LipschitzCurve::ray(0.0);
  CHECK(count_on_curve(p, positive_axis, 1e-8).count == 1);

  CHECK(count_on_curve(Polynomial::from_real({1, 0, 1}), positive_axis, 1e-8).count == 0);

  // Full real line = two rays.
  const Polynomial p2 = Polynomial::from_real({-1, 0, 1});
  const int on_line = count_on_curve(p2, LipschitzCurve::ray(0.0), 1e-8).count +
                      count_on_curve(p2, LipschitzCurve::ray(std::numbers::pi), 1e-8).count;
  CHECK(on_line == 2);
}

TEST_CASE("near-curve roots land in the ambiguous side channel") {
  // A root at angle 5e-8 off the positive axis with tol = 1e-8: too far to
  // count, close enough to flag.
  const Complex root = std::polar(1.0, 5e-8);
  const Polynomial p({-root, Complex{1.0, 0.0}});
  const CurveCount result = count_on_curve(p, LipschitzCurve::ray(0.0), 1e-8);
  CHECK(result.count == 0);
  REQUIRE(result.ambiguous.size() == 1);
  CHECK(std::abs(result.ambiguous[0].center - root) <= 1e-9);
}

TEST_CASE("root-finder failure carries the best iterate") {
  Rng rng(306);
  const Polynomial p = random_gaussian_real_poly(rng, 12);
  try {
    all_roots(p, /*max_iters=*/1);
    FAIL("expected RootFindingError");
  } catch (const RootFindingError& e) {
    CHECK(e.best().size() == 12);
    CHECK(e.best().residuals().size() == 12);
  }
}

TEST_CASE("curve counts never exceed the degree") {
  Rng rng(305);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 2 + static_cast<int>(rng.below(15));
    const Polynomial p = random_gaussian_real_poly(rng, n);
    const RootSet roots = all_roots(p);
    for (double lipschitz : {0.0, 0.5, 3.0}) {
      const LipschitzCurve curve = LipschitzCurve::log_spiral(lipschitz);
      CHECK(count_on_curve(roots, curve, 1e-6).count <= n);
    }
  }
}
