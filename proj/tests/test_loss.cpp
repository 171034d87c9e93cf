#include <doctest.h>

#include <cmath>
#include <random>

#include "qgraph/loss.hpp"

using namespace qgraph;

namespace {

// Central finite difference of the quantile-Huber value.
double fd_grad(double r, double tau, double kappa, double h = 1e-5) {
  return (quantile_huber(r + h, tau, kappa) - quantile_huber(r - h, tau, kappa)) / (2.0 * h);
}

bool near_breakpoint(double r, double tau, double kappa, double margin) {
  return std::abs(r + tau * kappa) < margin || std::abs(r - (1.0 - tau) * kappa) < margin;
}

}  // namespace

TEST_CASE("quantile loss check function") {
  CHECK(quantile_loss(0.0, 0.3) == 0.0);
  CHECK(quantile_loss(0.0, 0.9) == 0.0);

  // tau = 0.5 reduces to |r|/2
  for (double r : {-3.0, -0.7, 0.2, 5.0})
    CHECK(quantile_loss(r, 0.5) == doctest::Approx(std::abs(r) / 2.0));

  CHECK(quantile_loss(-2.0, 0.3) == doctest::Approx(0.6));
  CHECK(quantile_loss(2.0, 0.3) == doctest::Approx(1.4));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rdist(-5.0, 5.0), tdist(0.01, 0.99);
  for (int i = 0; i < 200; ++i) {
    const double r = rdist(rng), tau = tdist(rng);
    CHECK(quantile_loss(r, tau) >= 0.0);
    if (r != 0.0) CHECK(quantile_loss(r, tau) > 0.0);
  }
}

TEST_CASE("quantile huber values and branches") {
  CHECK(quantile_huber(0.0, 0.3, 0.4) == 0.0);
  // left branch, tau=0.3 kappa=0.4, r=-1 < -0.12
  CHECK(quantile_huber(-1.0, 0.3, 0.4) == doctest::Approx(0.282));
  // quadratic band
  CHECK(quantile_huber(0.1, 0.3, 0.4) == doctest::Approx(0.1 * 0.1 / 0.8));
  // continuity at both breakpoints
  for (double tau : {0.2, 0.5, 0.8}) {
    const double kappa = 0.4;
    const double left = -tau * kappa, right = (1.0 - tau) * kappa;
    CHECK(quantile_huber(left - 1e-12, tau, kappa) ==
          doctest::Approx(quantile_huber(left, tau, kappa)).epsilon(1e-9));
    CHECK(quantile_huber(right + 1e-12, tau, kappa) ==
          doctest::Approx(quantile_huber(right, tau, kappa)).epsilon(1e-9));
  }
  // tau=0.5, |r| > kappa/2: symmetric Huber form 0.5|r| - kappa/8
  for (double r : {-2.0, -0.5, 0.5, 2.0})
    CHECK(quantile_huber(r, 0.5, 0.4) == doctest::Approx(0.5 * std::abs(r) - 0.4 / 8.0));
}

TEST_CASE("quantile huber gradient matches finite differences") {
  CHECK(quantile_huber_grad(0.0, 0.3, 0.4) == 0.0);
  CHECK(quantile_huber_grad(-1.0, 0.3, 0.4) == doctest::Approx(-0.3));
  // both branches agree at the right breakpoint
  const double right = (1.0 - 0.3) * 0.4;
  CHECK(quantile_huber_grad(right, 0.3, 0.4) == doctest::Approx(1.0 - 0.3));
  CHECK(quantile_huber_grad(right + 1e-15, 0.3, 0.4) == doctest::Approx(1.0 - 0.3));

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> rdist(-3.0, 3.0), tdist(0.05, 0.95),
      kdist(0.05, 1.0);
  int checked = 0;
  while (checked < 100) {
    const double r = rdist(rng), tau = tdist(rng), kappa = kdist(rng);
    if (near_breakpoint(r, tau, kappa, 1e-4)) continue;
    CHECK(std::abs(quantile_huber_grad(r, tau, kappa) - fd_grad(r, tau, kappa)) < 1e-6);
    ++checked;
  }
}

TEST_CASE("quantile huber is convex in r") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> rdist(-5.0, 5.0), tdist(0.05, 0.95),
      ldist(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double r1 = rdist(rng), r2 = rdist(rng), lam = ldist(rng);
    const double tau = tdist(rng), kappa = 0.4;
    const double mid = quantile_huber(lam * r1 + (1.0 - lam) * r2, tau, kappa);
    const double chord =
        lam * quantile_huber(r1, tau, kappa) + (1.0 - lam) * quantile_huber(r2, tau, kappa);
    CHECK(mid <= chord + 1e-12);
  }
}

TEST_CASE("kappa -> 0 recovers the quantile loss") {
  // pointwise limit
  for (double r : {-2.0, -0.3, 0.0, 0.3, 2.0})
    for (double tau : {0.1, 0.5, 0.9})
      CHECK(std::abs(quantile_huber(r, tau, 1e-9) - quantile_loss(r, tau)) < 1e-8);

  // sup gap over [-10,10] shrinks monotonically across kappa = 0.4, 0.04, 0.004
  for (double tau : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    double prev = -1.0;
    for (double kappa : {0.4, 0.04, 0.004}) {
      double sup = 0.0;
      for (double r = -10.0; r <= 10.0; r += 0.005)
        sup = std::max(sup, std::abs(quantile_huber(r, tau, kappa) - quantile_loss(r, tau)));
      if (prev >= 0.0) CHECK(sup < prev);
      prev = sup;
    }
  }
}

TEST_CASE("elementwise loss sums quantile huber over entries") {
  QuantileParams p{0.3, 0.4};
  CHECK(elementwise_loss(Matrix::Zero(4, 5), p) == 0.0);

  Matrix m(1, 2);
  m << -1.0, 0.1;
  CHECK(elementwise_loss(m, p) ==
        doctest::Approx(quantile_huber(-1.0, 0.3, 0.4) + quantile_huber(0.1, 0.3, 0.4)));

  // scaling inside the quadratic band scales the loss quadratically
  Matrix small = Matrix::Constant(3, 3, 0.01);
  const double base = elementwise_loss(small, p);
  CHECK(elementwise_loss((2.0 * small).eval(), p) == doctest::Approx(4.0 * base));

  CHECK_THROWS_AS(elementwise_loss(m, QuantileParams{1.5, 0.4}), ConfigError);
  CHECK_THROWS_AS(elementwise_loss(m, QuantileParams{0.5, -1.0}), ConfigError);
}
