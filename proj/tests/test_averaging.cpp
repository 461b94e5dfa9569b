#include <cmath>

#include <doctest.h>

#include "divseek/averaging.hpp"

using namespace divseek;

TEST_CASE("gauss_legendre integrates polynomials exactly up to degree 2m-1") {
  const GaussRule rule = gauss_legendre(5);
  REQUIRE(rule.nodes.size() == 5);
  double sum_w = 0.0, x8 = 0.0, x9 = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    sum_w += rule.weights[i];
    x8 += rule.weights[i] * std::pow(rule.nodes[i], 8);
    x9 += rule.weights[i] * std::pow(rule.nodes[i], 9);
  }
  CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(x8 == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
  CHECK(x9 == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("ball average of |x|^2 is |x0|^2 + a^2 n/(n+2)") {
  for (int n : {2, 3, 4}) {
    const auto J = make_quadratic(Mat::Identity(n, n));
    const Vec x0 = Vec::Constant(n, 0.5);
    const double a = 0.7;
    const double expected = x0.squaredNorm() + a * a * n / (n + 2.0);
    CHECK(averaged_objective(J, x0, a) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("ball average of a linear function is the function itself") {
  const auto J = make_linear(Vec{{2.0, -1.0, 0.5}});
  const Vec x{{0.3, 1.0, -2.0}};
  CHECK(averaged_objective(J, x, 1.3) == doctest::Approx(J.evaluate(x)).epsilon(1e-12));
}

TEST_CASE("monte carlo mode agrees with the tensor rule") {
  const auto J = make_ringed_gaussian(3);
  const Vec x{{1.0, 0.5, -0.5}};
  const double tensor = averaged_objective(J, x, 1.0);
  QuadratureSpec mc;
  mc.mode = QuadratureSpec::Mode::monte_carlo;
  mc.monte_carlo_samples = 400000;
  mc.seed = 99;
  CHECK(averaged_objective(J, x, 1.0, mc) == doctest::Approx(tensor).epsilon(5e-3));
  // counter-based: same spec gives bitwise-identical estimates
  CHECK(averaged_objective(J, x, 1.0, mc) == averaged_objective(J, x, 1.0, mc));
}

TEST_CASE("surface-integral gradient is exact for quadratics") {
  Mat Q(3, 3);
  Q << 1.0, 0.2, 0.0, 0.2, 2.0, -0.3, 0.0, -0.3, 0.5;
  const auto J = make_quadratic(Q);
  const Vec x{{0.4, -1.0, 2.0}};
  const Vec grad = averaged_gradient(J, x, 0.8);
  CHECK((grad - 2.0 * Q * x).norm() < 1e-10);
}

TEST_CASE("surface-integral gradient matches finite differences of the average") {
  const auto J = make_ringed_gaussian(3);
  const Vec x{{1.2, 0.3, -0.8}};
  const double a = 0.9;
  const Vec fd = fd_gradient(
      [&](const Vec& y) { return averaged_objective(J, y, a); }, x, 1e-5);
  CHECK((averaged_gradient(J, x, a) - fd).norm() < 1e-6);
}

TEST_CASE("dither field is exact in 2-D where the curve is the whole circle") {
  const auto J = make_perturbed_decay(2);
  const Vec x{{1.0, -0.5}};
  const double a = 0.3, b = 2.0;
  const Vec expected = a * b * gradient_scale(2) * averaged_gradient(J, x, a);
  for (int k : {1, 3}) {
    CHECK((dither_field(J, x, a, b, k) - expected).norm() < 1e-8);
  }
}

TEST_CASE("filter field at n=3, k=1 has the closed-form value") {
  // -(b eta / 2pi) * integral of g U over one period = -(b eta / 2pi) (0, 8/3, 0)
  const Vec e = filter_field(1.0, 1.0, 1, 3);
  CHECK(e[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(e[1] == doctest::Approx(-8.0 / (6.0 * M_PI)).epsilon(1e-8));
  CHECK(e[2] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(filter_field(2.0, 3.0, 1, 3).norm() == doctest::Approx(6.0 * e.norm()).epsilon(1e-10));
}

TEST_CASE("minimum curve node counts and the hard floor") {
  CHECK(min_curve_nodes(2, 5) == 256);
  CHECK(min_curve_nodes(3, 2) == 1024);
  CHECK(min_curve_nodes(4, 2) == 4096);
  QuadratureSpec starved;
  starved.curve_nodes = 100;  // below the floor for any (n, k)
  CHECK_THROWS_AS(dither_field(make_ringed_gaussian(3), Vec::Zero(3), 1.0, 1.0, 2, starved),
                  std::runtime_error);
}

TEST_CASE("quadrature spec validation") {
  QuadratureSpec bad;
  bad.angular_nodes = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  QuadratureSpec bad2;
  bad2.radial_nodes = -1;
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
}

TEST_CASE("fd_gradient recovers an analytic gradient") {
  const auto f = [](const Vec& x) { return std::sin(x[0]) * std::exp(x[1]); };
  const Vec x{{0.4, -0.2}};
  const Vec g = fd_gradient(f, x, 1e-6);
  CHECK(g[0] == doctest::Approx(std::cos(0.4) * std::exp(-0.2)).epsilon(1e-8));
  CHECK(g[1] == doctest::Approx(std::sin(0.4) * std::exp(-0.2)).epsilon(1e-8));
}
