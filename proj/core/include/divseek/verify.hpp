#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "divseek/averaging.hpp"
#include "divseek/simulate.hpp"

namespace divseek {

struct CheckReport {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string details;

  nlohmann::json to_json() const;
  std::string to_line() const;  // one JSON object per line
};

// A fully configured simulation scenario.
struct Scenario {
  std::string id;
  ObjectiveField objective;
  ControlParams params;
  Vec x0;  // plant coordinates
  double eta0 = 0.0;
  DisturbanceSpec disturbance;
  IntegratorSpec integrator;
};

// The five reference scenarios: ex1_small_a, ex1_large_a (n=2, ripple decay),
// ex2_small_a, ex2_large_a (n=3, ringed objective), ex3 (n=4, flat bump).
Scenario example_scenario(const std::string& id);
std::vector<std::string> example_scenario_ids();

struct ScenarioResult {
  std::string id;
  double final_transformed_radius = 0.0;
  double final_plant_radius = 0.0;
  double objective_gap = 0.0;  // max of averaged objective minus its final value
  Trajectory trajectory;       // transformed coordinates
};

ScenarioResult run_scenario(const Scenario& sc, const QuadratureSpec& quad = {});
ScenarioResult run_example(const std::string& id);

// Surface-integral gradient vs finite differences of the ball average at
// `npoints` seeded random points with |x| <= 4.
CheckReport check_divergence_identity(const ObjectiveField& J, double a, int npoints, double tol,
                                      std::uint64_t seed, const QuadratureSpec& quad = {});

// Max-point error ||dither_field - a b c grad|| nonincreasing in k (10% slack)
// and below final_tol at the last k.
CheckReport check_field_limit(const ObjectiveField& J, double a, double b,
                              const std::vector<Vec>& points, const std::vector<int>& ks,
                              double final_tol, const QuadratureSpec& quad = {});

// ||filter_field(1)|| decreasing over ks and below final_tol at the last k.
CheckReport check_filter_limit(int n, const std::vector<int>& ks, double final_tol);

// Curve-vs-cube quadrature bound: |int f(filling_curve) - int f| <=
// lipschitz * sqrt(d) / 2^k. The Lipschitz constant is supplied, not
// estimated, so the check stays independent of the quantity it bounds.
CheckReport check_filling_bound(const std::function<double(const Vec&)>& f, double lipschitz,
                                int d, int k);

// Dual simulation of the plant-frame and transformed-frame systems from
// matched initial data; max_t |x - xt - a U(omega t)| <= tol over [0,horizon].
CheckReport check_change_of_variables(const Scenario& sc, double horizon, double tol);

// Transformed simulation vs the averaged gradient flow over [0, T] for each
// (omega, k) pair; sup errors nonincreasing along each axis (10% slack) and
// below eps at the largest pair.
CheckReport check_trajectory_approx(const ObjectiveField& J, const ControlParams& base,
                                    const Vec& xt0, double T, const std::vector<double>& omegas,
                                    const std::vector<int>& ks, double eps,
                                    const QuadratureSpec& quad = {});

// ISS surrogate on ex2_large_a: terminal averaged-objective gap bounded at
// delta = 0 and nondecreasing in the disturbance bound (20% slack).
CheckReport check_iss_behavior(const std::vector<double>& deltas, double baseline_gap_bound);

// Radial probe of the averaged gradient of the ringed objective on
// r in {0.1,...,6}: for expect_clean the gradient must never vanish; otherwise
// the probe must find sign changes of the radial derivative away from 0.
CheckReport check_assumption_probe(double a, bool expect_clean,
                                   const QuadratureSpec& quad = {});

// Cube-parametrized surface integral equals the sphere integral divided by
// 2 pi^{n-1}, cross-checked against averaged_gradient.
CheckReport check_rescale_identity(const ObjectiveField& J, const Vec& x, double a, double tol);

// Geometry identities: unit norm, periodicity, tangency, Gram cross-check,
// Jacobian vs finite differences.
std::vector<CheckReport> check_geometry_suite();

// Named check groups: geometry, identity, limits, claim1, cov, approx,
// examples, iss, rescale, assumption, all.
std::vector<CheckReport> run_suite(const std::string& selector);
std::vector<std::string> suite_selectors();

}  // namespace divseek
