// Acceptance gate: one pinned criterion per line, exit 1 if any fails.
// Tolerances and runtime budgets here are frozen; do not loosen them to make
// a failing build green.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "divseek/verify.hpp"

namespace {

using namespace divseek;
using clock_type = std::chrono::steady_clock;

int failures = 0;

void report(int index, const std::string& title, bool passed, const std::string& detail,
            double seconds, double budget_seconds = 0.0) {
  bool ok = passed;
  std::string note = detail;
  if (budget_seconds > 0.0 && seconds > budget_seconds) {
    ok = false;
    note += " [over time budget " + std::to_string(budget_seconds) + "s]";
  }
  if (!ok) ++failures;
  std::printf("criterion %02d [%s] %s -- %s (%.1fs)\n", index, ok ? "PASS" : "FAIL", title.c_str(),
              note.c_str(), seconds);
  std::fflush(stdout);
}

bool all_passed(const std::vector<CheckReport>& reps, std::string& detail) {
  bool ok = true;
  double worst = 0.0;
  for (const auto& r : reps) {
    ok = ok && r.passed;
    if (r.tolerance > 0.0) worst = std::max(worst, r.measured / r.tolerance);
    if (!r.passed) detail += " FAILED:" + r.name + " (" + r.details + ")";
  }
  if (ok) detail += "worst measured/tol ratio " + std::to_string(worst);
  return ok;
}

std::vector<Vec> segment_points(const Vec& target, int count) {
  std::vector<Vec> pts;
  for (int i = 0; i < count; ++i)
    pts.push_back((static_cast<double>(i) / (count - 1)) * target);
  return pts;
}

// First two positive roots of the radial derivative of the ringed objective,
// located by sign change + bisection along the first axis.
std::vector<double> stationary_radii(const ObjectiveField& J, double lo, double hi) {
  Vec e1 = Vec::Zero(J.dimension);
  e1[0] = 1.0;
  auto slope = [&](double r) { return J.analytic_gradient(r * e1).dot(e1); };
  std::vector<double> roots;
  const int grid = 400;
  double prev_r = lo, prev_s = slope(lo);
  for (int i = 1; i <= grid; ++i) {
    const double r = lo + (hi - lo) * i / grid;
    const double s = slope(r);
    if (prev_s * s < 0.0) {
      double a = prev_r, b = r;
      for (int it = 0; it < 60; ++it) {
        const double m = 0.5 * (a + b);
        (slope(a) * slope(m) <= 0.0 ? b : a) = m;
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_r = r;
    prev_s = s;
  }
  return roots;
}

double elapsed(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

}  // namespace

int main() {
  // 1. Surface-integral gradient vs finite differences of the ball average.
  {
    const auto t0 = clock_type::now();
    std::vector<CheckReport> reps;
    for (double a : {0.5, 1.0}) {
      reps.push_back(check_divergence_identity(make_ringed_gaussian(3), a, 20, 1e-3, 11));
      reps.push_back(check_divergence_identity(make_perturbed_decay(2), a, 20, 1e-3, 12,
                                               {.angular_nodes = 256, .radial_nodes = 64}));
      reps.push_back(check_divergence_identity(make_flat_bump(4), a, 20, 1e-3, 13,
                                               {.angular_nodes = 24, .radial_nodes = 24}));
    }
    std::string detail;
    const bool ok = all_passed(reps, detail);
    report(1, "divergence-theorem gradient identity (3 objectives, a in {1/2,1})", ok, detail,
           elapsed(t0), 30.0);
  }

  // 2. Dither field converges to the scaled averaged gradient as k grows.
  {
    const auto t0 = clock_type::now();
    const Vec target{{3.0, 3.0, 3.0}};
    const auto rep = check_field_limit(make_ringed_gaussian(3), 1.0, 1.0,
                                       segment_points(target, 6), {1, 2, 3, 4, 5}, 5e-3);
    report(2, "dither-field limit, nonincreasing over k=1..5, <=5e-3 at k=5", rep.passed,
           rep.details, elapsed(t0), 60.0);
  }

  // 3. Filter coupling field vanishes as k grows.
  {
    const auto t0 = clock_type::now();
    const auto rep = check_filter_limit(3, {1, 2, 3, 4, 5}, 1e-2);
    report(3, "filter-field limit, decreasing over k=1..5, <=1e-2 at k=5", rep.passed, rep.details,
           elapsed(t0));
  }

  // 4. Space-filling curve quadrature bound with supplied Lipschitz constants.
  {
    const auto t0 = clock_type::now();
    const auto plane = [](const Vec& z) { return z[0] + z[1]; };
    const auto wave = [](const Vec& z) {
      return std::sin(2.0 * M_PI * z[0]) * std::sin(2.0 * M_PI * z[1]);
    };
    std::vector<CheckReport> reps;
    for (int k : {2, 3, 4}) {
      reps.push_back(check_filling_bound(plane, std::sqrt(2.0), 2, k));
      reps.push_back(check_filling_bound(wave, 2.0 * M_PI * std::sqrt(2.0), 2, k));
    }
    std::string detail;
    const bool ok = all_passed(reps, detail);
    report(4, "filling-curve modulus-of-continuity bound (2 integrands, k in {2,3,4})", ok, detail,
           elapsed(t0));
  }

  // 5. Plant-frame and transformed-frame simulations agree under the shift.
  {
    const auto t0 = clock_type::now();
    const auto rep = check_change_of_variables(example_scenario("ex2_large_a"), 50.0, 1e-5);
    report(5, "change of variables, dual simulation, max deviation <=1e-5 on [0,50]", rep.passed,
           rep.details, elapsed(t0));
  }

  // 6. Transformed system tracks the averaged gradient flow as omega, k grow.
  {
    const auto t0 = clock_type::now();
    ControlParams p{.n = 3, .a = 1.0, .b = 1.0, .h = 1.0, .omega = 1.0, .k = 2,
                    .filter_enabled = true};
    const Vec xt0 = to_transformed(Vec{{3.0, 3.0, 3.0}}, 0.0, p);
    const auto rep = check_trajectory_approx(make_ringed_gaussian(3), p, xt0, 30.0,
                                             {1.0, 5.0, 20.0}, {2, 3, 4}, 0.1,
                                             {.angular_nodes = 32});
    report(6, "averaging trend over (omega,k), sup error <=0.1 at (20,4)", rep.passed, rep.details,
           elapsed(t0), 300.0);
  }

  // 7. 2-D scenario: small dither traps at the ripple ring, larger escapes.
  {
    const auto t0 = clock_type::now();
    const ScenarioResult small = run_example("ex1_small_a");
    const ScenarioResult large = run_example("ex1_large_a");
    const bool ok = small.final_transformed_radius >= 3.14 &&
                    small.final_transformed_radius <= 3.44 &&
                    large.final_transformed_radius <= 0.2;
    report(7,
           "2-D ripple scenario: a=1/5 traps in [3.14,3.44], a=2/5 reaches <=0.2", ok,
           "small-a radius " + std::to_string(small.final_transformed_radius) + ", large-a radius " +
               std::to_string(large.final_transformed_radius),
           elapsed(t0));
  }

  // 8. 3-D ringed scenario: trap vs escape, plus recovery of the stationary
  // radii of the objective itself.
  {
    const auto t0 = clock_type::now();
    const ScenarioResult small = run_example("ex2_small_a");
    const ScenarioResult large = run_example("ex2_large_a");
    const auto radii = stationary_radii(make_ringed_gaussian(3), 1.5, 3.0);
    const bool radii_ok = radii.size() >= 2 && std::abs(radii[0] - 2.03) <= 0.03 &&
                          std::abs(radii[1] - 2.55) <= 0.03;
    const bool ok = small.final_transformed_radius >= 2.52 &&
                    small.final_transformed_radius <= 2.82 &&
                    large.final_transformed_radius <= 0.3 && radii_ok;
    std::string detail = "small-a radius " + std::to_string(small.final_transformed_radius) +
                         ", large-a radius " + std::to_string(large.final_transformed_radius);
    if (radii.size() >= 2)
      detail += ", stationary radii " + std::to_string(radii[0]) + "/" + std::to_string(radii[1]);
    report(8, "3-D ringed scenario: a=1/2 traps in [2.52,2.82], a=1 reaches <=0.3, radii 2.03/2.55",
           ok, detail, elapsed(t0));
  }

  // 9. 4-D flat-bump scenario: transformed radius decreasing, plant settles on
  // a dither sphere around the origin.
  {
    const auto t0 = clock_type::now();
    const ScenarioResult res = run_example("ex3");
    const Trajectory& traj = res.trajectory;
    bool monotone = true;
    double prev = -1.0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      if (traj.times[i] < 20.0) continue;  // transient
      const double r = traj.states[i].norm();
      if (prev >= 0.0 && r > prev + 1e-3) monotone = false;
      prev = r;
    }
    const bool ok = monotone && res.final_plant_radius >= 0.8 && res.final_plant_radius <= 1.2;
    report(9, "4-D flat-bump scenario: |xt| decreasing over T=200, final plant radius in [0.8,1.2]",
           ok,
           "monotone=" + std::string(monotone ? "yes" : "no") + ", final plant radius " +
               std::to_string(res.final_plant_radius) + ", final transformed radius " +
               std::to_string(res.final_transformed_radius),
           elapsed(t0));
  }

  // 10. Disturbance response: terminal averaged-objective gap small without
  // disturbance and nondecreasing in the disturbance bound.
  {
    const auto t0 = clock_type::now();
    const auto rep = check_iss_behavior({0.0, 0.05, 0.2}, 0.02);
    report(10, "ISS surrogate: baseline gap <=0.02, nondecreasing in delta (20% slack)", rep.passed,
           rep.details, elapsed(t0));
  }

  // 11. Geometry identities.
  {
    const auto t0 = clock_type::now();
    auto reps = check_geometry_suite();
    std::string detail;
    const bool ok = all_passed(reps, detail);
    report(11, "geometry suite: unit norm, periodicity, tangency, Gram, Jacobian", ok, detail,
           elapsed(t0), 5.0);
  }

  if (failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion/criteria FAILED\n", failures);
  return 1;
}
