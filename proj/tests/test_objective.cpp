#include <cmath>

#include <doctest.h>

#include "divseek/averaging.hpp"
#include "divseek/objective.hpp"

using namespace divseek;

namespace {

void check_gradient(const ObjectiveField& J, const Vec& x, double tol = 1e-7) {
  REQUIRE(J.analytic_gradient);
  const Vec fd = fd_gradient(J.evaluate, x, 1e-6);
  CHECK((J.analytic_gradient(x) - fd).norm() < tol);
}

}  // namespace

TEST_CASE("ringed gaussian values and gradient") {
  const auto J = make_ringed_gaussian(3);
  CHECK(J.dimension == 3);
  CHECK(J.evaluate(Vec::Zero(3)) == doctest::Approx(2.0 - std::exp(-8.0)));
  // on the shell |x| = 2 the ring term peaks
  const Vec shell{{2.0, 0.0, 0.0}};
  CHECK(J.evaluate(shell) == doctest::Approx(2.0 * std::exp(-4.0 / 9.0) - 1.0));
  check_gradient(J, Vec{{0.7, -1.1, 2.2}});
  check_gradient(J, Vec{{2.5, 0.0, 0.0}});
}

TEST_CASE("verbatim ringed variant differs and is negative at the origin") {
  const auto J = make_ringed_gaussian_verbatim(3);
  CHECK(J.evaluate(Vec::Zero(3)) == doctest::Approx(2.0 - std::exp(2.0)));
  CHECK(J.evaluate(Vec::Zero(3)) < 0.0);
}

TEST_CASE("perturbed decay objective") {
  const auto J = make_perturbed_decay(2);
  const Vec x{{0.6, 0.8}};  // |x| = 1
  CHECK(J.evaluate(x) == doctest::Approx(0.5 + std::sin(10.0) / 10.0));
  CHECK(J.evaluate(Vec::Zero(2)) == doctest::Approx(1.0));
  check_gradient(J, Vec{{1.4, -0.3}}, 1e-6);
}

TEST_CASE("flat bump objective with removable singularity at the origin") {
  const auto J = make_flat_bump(4);
  CHECK(J.evaluate(Vec::Zero(4)) == doctest::Approx(1.0));
  const Vec x{{1.0, 1.0, 1.0, 1.0}};  // |x|^2 = 4
  CHECK(J.evaluate(x) == doctest::Approx(1.0 - std::exp(-1.0)));
  check_gradient(J, Vec{{0.5, 0.5, -0.5, 0.25}}, 1e-6);
}

TEST_CASE("quadratic, linear, constant objectives") {
  Mat Q(2, 2);
  Q << 2.0, 0.5, 0.5, 1.0;
  const auto q = make_quadratic(Q);
  const Vec x{{1.0, -2.0}};
  CHECK(q.evaluate(x) == doctest::Approx((x.transpose() * Q * x).value()));
  CHECK((q.analytic_gradient(x) - 2.0 * Q * x).norm() < 1e-14);
  Mat bad(2, 2);
  bad << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(make_quadratic(bad), std::invalid_argument);

  const Vec w{{3.0, -1.0, 0.5}};
  const auto l = make_linear(w);
  CHECK(l.evaluate(Vec{{1.0, 1.0, 2.0}}) == doctest::Approx(3.0));
  CHECK((l.analytic_gradient(Vec::Zero(3)) - w).norm() == 0.0);

  const auto c = make_constant(2, 4.5);
  CHECK(c.evaluate(Vec{{9.0, -9.0}}) == 4.5);
  CHECK(c.analytic_gradient(Vec{{1.0, 1.0}}).norm() == 0.0);
}

TEST_CASE("builtin_objective factory resolves ids and rejects unknowns") {
  CHECK(builtin_objective("ringed_gaussian_3d").dimension == 3);
  CHECK(builtin_objective("ringed_gaussian_3d", {{"n", 5}}).dimension == 5);
  CHECK(builtin_objective("perturbed_decay_2d").dimension == 2);
  CHECK(builtin_objective("flat_bump_4d").dimension == 4);
  const auto q = builtin_objective("quadratic", {{"Q", {{1.0, 0.0}, {0.0, 2.0}}}});
  CHECK(q.evaluate(Vec{{1.0, 1.0}}) == doctest::Approx(3.0));
  const auto l = builtin_objective("linear", {{"w", {1.0, 2.0}}});
  CHECK(l.evaluate(Vec{{2.0, 1.0}}) == doctest::Approx(4.0));
  const auto c = builtin_objective("constant", {{"n", 3}, {"c", -2.0}});
  CHECK(c.evaluate(Vec::Zero(3)) == -2.0);
  CHECK_THROWS_AS(builtin_objective("nope"), std::invalid_argument);
}

TEST_CASE("ball volume and gradient scale constants") {
  CHECK(ball_volume(1) == doctest::Approx(2.0));
  CHECK(ball_volume(2) == doctest::Approx(M_PI));
  CHECK(ball_volume(3) == doctest::Approx(4.0 * M_PI / 3.0));
  CHECK(ball_volume(4) == doctest::Approx(M_PI * M_PI / 2.0));
  CHECK(gradient_scale(2) == doctest::Approx(0.5));
  CHECK(gradient_scale(3) == doctest::Approx(2.0 / (3.0 * M_PI)));
  CHECK(gradient_scale(4) == doctest::Approx(1.0 / (4.0 * M_PI)));
}
