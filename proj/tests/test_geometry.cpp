#include <cmath>
#include <random>

#include <doctest.h>

#include "divseek/geometry.hpp"

using namespace divseek;

TEST_CASE("sphere_param matches the explicit low-dimensional formulas") {
  const Vec c2 = sphere_param(Vec{{0.7}});
  CHECK(c2[0] == doctest::Approx(std::cos(0.7)).epsilon(1e-15));
  CHECK(c2[1] == doctest::Approx(std::sin(0.7)).epsilon(1e-15));

  const double t0 = M_PI / 4.0, t1 = M_PI / 3.0;
  const Vec c3 = sphere_param(Vec{{t0, t1}});
  CHECK(c3[0] == doctest::Approx(std::cos(t0) * std::sin(t1)));
  CHECK(c3[1] == doctest::Approx(std::sin(t0) * std::sin(t1)));
  CHECK(c3[2] == doctest::Approx(std::cos(t1)));
}

TEST_CASE("sphere_param stays on the unit sphere for arbitrary angles") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> ang(-10.0, 10.0);
  for (int n = 2; n <= 5; ++n) {
    Vec theta(n - 1);
    for (int trial = 0; trial < 200; ++trial) {
      for (int j = 0; j < n - 1; ++j) theta[j] = ang(gen);
      CHECK(sphere_param(theta).norm() == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("sphere_param_jacobian agrees with central differences") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> ang(-4.0, 4.0);
  const double h = 1e-6;
  for (int n = 2; n <= 4; ++n) {
    Vec theta(n - 1);
    for (int j = 0; j < n - 1; ++j) theta[j] = ang(gen);
    const Mat jac = sphere_param_jacobian(theta);
    for (int j = 0; j < n - 1; ++j) {
      Vec tp = theta, tm = theta;
      tp[j] += h;
      tm[j] -= h;
      const Vec fd = (sphere_param(tp) - sphere_param(tm)) / (2.0 * h);
      CHECK((jac.col(j) - fd).norm() < 1e-8);
    }
  }
}

TEST_CASE("gram_sqrt equals the product of powered sines") {
  CHECK(gram_sqrt(Vec{{1.3}}) == doctest::Approx(1.0));  // n = 2: empty product
  CHECK(gram_sqrt(Vec{{0.2, 0.9}}) == doctest::Approx(std::abs(std::sin(0.9))));
  CHECK(gram_sqrt(Vec{{0.2, 0.9, 2.4}}) ==
        doctest::Approx(std::abs(std::sin(0.9)) * std::sin(2.4) * std::sin(2.4)));
}

TEST_CASE("angle_path and angle_rates stack frequencies as powers of two") {
  const Vec rates = angle_rates(2, 4);
  REQUIRE(rates.size() == 3);
  CHECK(rates[0] == 1.0);
  CHECK(rates[1] == 2.0);
  CHECK(rates[2] == 8.0);
  const Vec path = angle_path(0.5, 2, 4);
  CHECK(path[0] == doctest::Approx(0.5));
  CHECK(path[1] == doctest::Approx(1.0));
  CHECK(path[2] == doctest::Approx(4.0));
  CHECK(angle_rates(3, 2).size() == 1);
  CHECK(angle_rates(3, 2)[0] == 1.0);
}

TEST_CASE("dither curve is 2pi-periodic and the velocity is tangent") {
  for (int n : {2, 3, 4}) {
    for (int k : {1, 2}) {
      for (double tau : {0.0, 0.37, 2.0, 5.9}) {
        const Vec u = dither_curve(tau, k, n);
        CHECK((dither_curve(tau + 2.0 * M_PI, k, n) - u).norm() < 1e-12);
        // |U|^2 = 1 implies U . dU/dtau = 0
        CHECK(std::abs(u.dot(dither_velocity(tau, k, n))) < 1e-12);
      }
    }
  }
}

TEST_CASE("dither_velocity matches finite differences of the curve") {
  const double h = 1e-6;
  for (double tau : {0.1, 1.7, 4.4}) {
    const Vec fd =
        (dither_curve(tau + h, 2, 3) - dither_curve(tau - h, 2, 3)) / (2.0 * h);
    CHECK((dither_velocity(tau, 2, 3) - fd).norm() < 1e-8);
  }
}

TEST_CASE("dither_probe is the Gram-weighted curve and has norm at most 1") {
  for (double tau : {0.3, 2.2, 5.1}) {
    const Vec theta = angle_path(tau, 2, 4);
    const Vec expected = gram_sqrt(theta) * dither_curve(tau, 2, 4);
    CHECK((dither_probe(tau, 2, 4) - expected).norm() < 1e-14);
    CHECK(dither_probe(tau, 2, 4).norm() <= 1.0 + 1e-14);
  }
}

TEST_CASE("sawtooth wraps into [0,1) including negatives") {
  CHECK(sawtooth(0.25) == doctest::Approx(0.25));
  CHECK(sawtooth(1.5) == doctest::Approx(0.5));
  CHECK(sawtooth(-0.25) == doctest::Approx(0.75));
  CHECK(sawtooth(3.0) == doctest::Approx(0.0));
}

TEST_CASE("filling_curve stacks sawtooth frequencies") {
  const Vec g = filling_curve(0.3, 2, 3);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == doctest::Approx(0.3));
  CHECK(g[1] == doctest::Approx(0.2));   // saw(4 * 0.3)
  CHECK(g[2] == doctest::Approx(0.8));   // saw(16 * 0.3)
}

TEST_CASE("angle_rescale doubles the first coordinate and scales by pi") {
  const Vec th = angle_rescale(Vec{{0.5, 0.25}});
  CHECK(th[0] == doctest::Approx(M_PI));
  CHECK(th[1] == doctest::Approx(M_PI / 4.0));
  CHECK_THROWS_AS(angle_rescale(Vec{{1.5, 0.0}}), std::invalid_argument);
}

TEST_CASE("dimension errors are rejected") {
  CHECK_THROWS_AS(sphere_param(Vec(0)), std::invalid_argument);
  CHECK_THROWS_AS(angle_rates(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(angle_rates(1, 1), std::invalid_argument);
}
