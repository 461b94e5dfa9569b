#include "divseek/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace divseek {

nlohmann::json CheckReport::to_json() const {
  return {{"name", name},
          {"passed", passed},
          {"measured", measured},
          {"tolerance", tolerance},
          {"details", details}};
}

std::string CheckReport::to_line() const { return to_json().dump(); }

namespace {

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(6);
  ss << v;
  return ss.str();
}

std::vector<Vec> sample_ball(int n, int count, double radius, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unif(-radius, radius);
  std::vector<Vec> pts;
  pts.reserve(count);
  Vec x(n);
  while (static_cast<int>(pts.size()) < count) {
    for (int i = 0; i < n; ++i) x[i] = unif(gen);
    if (x.norm() <= radius) pts.push_back(x);
  }
  return pts;
}

// Linear interpolation into a uniformly recorded trajectory.
Vec interp_state(const RawTrajectory& traj, double t) {
  const double t0 = traj.times.front();
  const double dt = traj.times[1] - traj.times[0];
  const double pos = (t - t0) / dt;
  const long i = std::clamp(static_cast<long>(std::floor(pos)), 0L,
                            static_cast<long>(traj.times.size()) - 2);
  const double w = std::clamp(pos - i, 0.0, 1.0);
  return (1.0 - w) * traj.states[i] + w * traj.states[i + 1];
}

}  // namespace

std::vector<std::string> example_scenario_ids() {
  return {"ex1_small_a", "ex1_large_a", "ex2_small_a", "ex2_large_a", "ex3"};
}

Scenario example_scenario(const std::string& id) {
  Scenario sc;
  sc.id = id;
  sc.disturbance = DisturbanceSpec::zero();
  if (id == "ex1_small_a" || id == "ex1_large_a") {
    sc.objective = make_perturbed_decay(2);
    sc.params = {.n = 2,
                 .a = id == "ex1_small_a" ? 0.2 : 0.4,
                 .b = 1.0,
                 .h = 1.0,
                 .omega = 2.0,
                 .k = 1,
                 .filter_enabled = true};
    sc.x0 = Vec{{-3.0, 0.0}};
  } else if (id == "ex2_small_a" || id == "ex2_large_a") {
    sc.objective = make_ringed_gaussian(3);
    sc.params = {.n = 3,
                 .a = id == "ex2_small_a" ? 0.5 : 1.0,
                 .b = 1.0,
                 .h = 1.0,
                 .omega = 1.0,
                 .k = 2,
                 .filter_enabled = true};
    sc.x0 = Vec{{3.0, 3.0, 3.0}};
  } else if (id == "ex3") {
    sc.objective = make_flat_bump(4);
    sc.params = {.n = 4, .a = 1.0, .b = 1.0, .h = 1.0, .omega = 1.0, .k = 2,
                 .filter_enabled = true};
    sc.x0 = Vec{{1.0, 1.0, 1.0, 1.0}};
  } else {
    throw std::invalid_argument("unknown scenario id: " + id);
  }
  sc.eta0 = 0.0;
  const ControlParams& p = sc.params;
  // Horizon 100/(abc) lets the slow averaged dynamics settle; ex3 is pinned
  // to 200 time units, the span over which its radius band is calibrated.
  sc.integrator.t_final =
      id == "ex3" ? 200.0 : 100.0 / (p.a * p.b * gradient_scale(p.n));
  sc.integrator.steps_per_fast_period = 64;
  const double dt = default_step(p, sc.integrator.steps_per_fast_period);
  const long steps = static_cast<long>(std::ceil(sc.integrator.t_final / dt));
  sc.integrator.record_stride = static_cast<int>(std::max(1L, steps / 2000));
  return sc;
}

ScenarioResult run_scenario(const Scenario& sc, const QuadratureSpec& quad) {
  const ControlParams& p = sc.params;
  const Vec xt0 = to_transformed(sc.x0, 0.0, p);
  Trajectory traj =
      simulate_transformed(sc.objective, p, sc.disturbance, xt0, sc.eta0, sc.integrator);

  ScenarioResult res;
  res.id = sc.id;
  const Vec& xt_final = traj.states.back();
  res.final_transformed_radius = xt_final.norm();
  res.final_plant_radius = from_transformed(xt_final, traj.times.back(), p).norm();
  const double y_star = averaged_objective(sc.objective, Vec::Zero(p.n), p.a, quad);
  res.objective_gap = y_star - averaged_objective(sc.objective, xt_final, p.a, quad);
  res.trajectory = std::move(traj);
  return res;
}

ScenarioResult run_example(const std::string& id) { return run_scenario(example_scenario(id)); }

CheckReport check_divergence_identity(const ObjectiveField& J, double a, int npoints, double tol,
                                      std::uint64_t seed, const QuadratureSpec& quad) {
  if (npoints < 1) throw std::invalid_argument("check_divergence_identity: need points");
  const auto points = sample_ball(J.dimension, npoints, 4.0, seed);
  const double fd_step = 1e-4;
  double worst = 0.0;
  for (const Vec& x : points) {
    const Vec lhs = averaged_gradient(J, x, a, quad);
    const Vec rhs = fd_gradient(
        [&](const Vec& p) { return averaged_objective(J, p, a, quad); }, x, fd_step);
    worst = std::max(worst, (lhs - rhs).norm() / (1.0 + rhs.norm()));
  }
  CheckReport rep;
  rep.name = "divergence_identity_n" + std::to_string(J.dimension) + "_a" + fmt(a);
  rep.measured = worst;
  rep.tolerance = tol;
  rep.passed = worst <= tol;
  rep.details = std::to_string(npoints) + " points, fd step " + fmt(fd_step);
  return rep;
}

CheckReport check_field_limit(const ObjectiveField& J, double a, double b,
                              const std::vector<Vec>& points, const std::vector<int>& ks,
                              double final_tol, const QuadratureSpec& quad) {
  if (points.empty() || ks.empty())
    throw std::invalid_argument("check_field_limit: empty points or k range");
  const int n = J.dimension;
  const double abc = a * b * gradient_scale(n);
  std::vector<Vec> grads;
  grads.reserve(points.size());
  for (const Vec& x : points) grads.push_back(abc * averaged_gradient(J, x, a, quad));

  std::vector<double> errs;
  for (int k : ks) {
    double e = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
      e = std::max(e, (dither_field(J, points[i], a, b, k, quad) - grads[i]).norm());
    errs.push_back(e);
  }
  bool mono = true;
  for (std::size_t i = 0; i + 1 < errs.size(); ++i)
    if (errs[i + 1] > 1.1 * errs[i]) mono = false;

  CheckReport rep;
  rep.name = "field_limit_n" + std::to_string(n) + "_a" + fmt(a);
  rep.measured = errs.back();
  rep.tolerance = final_tol;
  rep.passed = mono && errs.back() <= final_tol;
  std::ostringstream ss;
  ss << "errors over k:";
  for (double e : errs) ss << ' ' << fmt(e);
  if (!mono) ss << " (not nonincreasing)";
  rep.details = ss.str();
  return rep;
}

CheckReport check_filter_limit(int n, const std::vector<int>& ks, double final_tol) {
  std::vector<double> norms;
  for (int k : ks) norms.push_back(filter_field(1.0, 1.0, k, n).norm());
  // For several (n, k) the field vanishes identically (the probe has no
  // Fourier content at the surviving frequencies), so the measured norms sit
  // at quadrature roundoff; monotonicity is only meaningful above that floor.
  constexpr double kRoundoff = 1e-12;
  bool mono = true;
  for (std::size_t i = 0; i + 1 < norms.size(); ++i)
    if (norms[i + 1] > std::max(norms[i], kRoundoff)) mono = false;

  CheckReport rep;
  rep.name = "filter_limit_n" + std::to_string(n);
  rep.measured = norms.back();
  rep.tolerance = final_tol;
  rep.passed = mono && norms.back() <= final_tol;
  std::ostringstream ss;
  ss << "norms over k:";
  for (double v : norms) ss << ' ' << fmt(v);
  rep.details = ss.str();
  return rep;
}

CheckReport check_filling_bound(const std::function<double(const Vec&)>& f, double lipschitz,
                                int d, int k) {
  const double cells = std::ldexp(1.0, d * k);
  if (cells * 64.0 > 5e7)
    throw std::invalid_argument("check_filling_bound: node budget exceeded for d*k");
  const long nodes = static_cast<long>(cells) * 64;
  double curve = 0.0;
  for (long i = 0; i < nodes; ++i)
    curve += f(filling_curve((i + 0.5) / static_cast<double>(nodes), k, d));
  curve /= static_cast<double>(nodes);

  const GaussRule gl = gauss_legendre(32);
  std::vector<int> idx(d, 0);
  double cube = 0.0;
  Vec z(d);
  const long total = static_cast<long>(std::pow(32.0, d));
  for (long c = 0; c < total; ++c) {
    double w = 1.0;
    for (int j = 0; j < d; ++j) {
      z[j] = 0.5 * (gl.nodes[idx[j]] + 1.0);
      w *= 0.5 * gl.weights[idx[j]];
    }
    cube += w * f(z);
    for (int j = 0; j < d; ++j) {
      if (++idx[j] < 32) break;
      idx[j] = 0;
    }
  }

  CheckReport rep;
  rep.name = "filling_bound_d" + std::to_string(d) + "_k" + std::to_string(k);
  rep.measured = std::abs(curve - cube);
  rep.tolerance = lipschitz * std::sqrt(static_cast<double>(d)) / std::ldexp(1.0, k);
  rep.passed = rep.measured <= rep.tolerance;
  rep.details = "curve integral " + fmt(curve) + ", cube integral " + fmt(cube);
  return rep;
}

CheckReport check_change_of_variables(const Scenario& sc, double horizon, double tol) {
  IntegratorSpec spec = sc.integrator;
  spec.t_final = horizon;
  spec.dt = 0.0;
  spec.steps_per_fast_period = 256;  // keep integrator error well below tol
  spec.record_stride = 4;
  const ControlParams& p = sc.params;
  const Vec xt0 = to_transformed(sc.x0, 0.0, p);

  const Trajectory plant =
      simulate_closed_loop(sc.objective, p, sc.disturbance, sc.x0, sc.eta0, spec);
  const Trajectory shifted =
      simulate_transformed(sc.objective, p, sc.disturbance, xt0, sc.eta0, spec);

  double worst = 0.0;
  for (std::size_t i = 0; i < plant.times.size(); ++i) {
    const Vec expect = from_transformed(shifted.states[i], shifted.times[i], p);
    worst = std::max(worst, (plant.states[i] - expect).norm());
  }

  CheckReport rep;
  rep.name = "change_of_variables_" + sc.id;
  rep.measured = worst;
  rep.tolerance = tol;
  rep.passed = worst <= tol;
  rep.details = "horizon " + fmt(horizon) + ", " + std::to_string(plant.times.size()) + " samples";
  return rep;
}

CheckReport check_trajectory_approx(const ObjectiveField& J, const ControlParams& base,
                                    const Vec& xt0, double T, const std::vector<double>& omegas,
                                    const std::vector<int>& ks, double eps,
                                    const QuadratureSpec& quad) {
  if (omegas.empty() || ks.empty())
    throw std::invalid_argument("check_trajectory_approx: empty sweep");
  // Undisturbed averaged flow is shared by all (omega, k) pairs.
  const double flow_dt = 0.02;
  const RawTrajectory flow = integrate(
      [&](double t, const Vec& y) {
        return averaged_flow_rhs(y, t, J, base, quad, nullptr, nullptr);
      },
      xt0, 0.0, flow_dt, T, 1);
  for (const Vec& x : flow.states)
    if (x.norm() > 100.0)
      throw std::runtime_error("check_trajectory_approx: averaged flow left its compact set");

  Eigen::MatrixXd err(omegas.size(), ks.size());
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    for (std::size_t j = 0; j < ks.size(); ++j) {
      ControlParams p = base;
      p.omega = omegas[i];
      p.k = ks[j];
      IntegratorSpec spec;
      spec.t_final = T;
      spec.steps_per_fast_period = 64;
      spec.record_stride = 8;
      const Trajectory traj =
          simulate_transformed(J, p, DisturbanceSpec::zero(), xt0, 0.0, spec);
      double sup = 0.0;
      for (std::size_t r = 0; r < traj.times.size(); ++r)
        sup = std::max(sup, (traj.states[r] - interp_state(flow, traj.times[r])).norm());
      err(i, j) = sup;
    }
  }

  bool mono = true;
  for (long i = 0; i < err.rows(); ++i)
    for (long j = 0; j + 1 < err.cols(); ++j)
      if (err(i, j + 1) > 1.1 * err(i, j)) mono = false;
  for (long j = 0; j < err.cols(); ++j)
    for (long i = 0; i + 1 < err.rows(); ++i)
      if (err(i + 1, j) > 1.1 * err(i, j)) mono = false;

  CheckReport rep;
  rep.name = "trajectory_approx_n" + std::to_string(base.n);
  rep.measured = err(err.rows() - 1, err.cols() - 1);
  rep.tolerance = eps;
  rep.passed = mono && rep.measured <= eps;
  std::ostringstream ss;
  ss << "sup errors (rows omega, cols k):";
  for (long i = 0; i < err.rows(); ++i)
    for (long j = 0; j < err.cols(); ++j) ss << ' ' << fmt(err(i, j));
  if (!mono) ss << " (not nonincreasing)";
  rep.details = ss.str();
  return rep;
}

CheckReport check_iss_behavior(const std::vector<double>& deltas, double baseline_gap_bound) {
  if (deltas.empty()) throw std::invalid_argument("check_iss_behavior: empty delta list");
  CheckReport probe = check_assumption_probe(1.0, true);
  CheckReport rep;
  rep.name = "iss_surrogate_ex2_large_a";
  if (!probe.passed) {
    rep.passed = false;
    rep.details = "assumption probe failed: " + probe.details;
    return rep;
  }

  std::vector<double> gaps;
  bool eta_ok = true;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    Scenario sc = example_scenario("ex2_large_a");
    if (deltas[i] > 0.0)
      sc.disturbance = DisturbanceSpec::piecewise_uniform(deltas[i], 0.1, 42 + i);
    const ScenarioResult res = run_scenario(sc);
    gaps.push_back(res.objective_gap);
    // |J| <= 2 everywhere for the ringed objective
    const double rho = std::max(std::abs(sc.eta0), 2.0 + deltas[i]);
    for (double eta : res.trajectory.filter_states)
      if (std::abs(eta) > rho + 1e-9) eta_ok = false;
  }

  bool mono = true;
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
    if (gaps[i + 1] < 0.8 * gaps[i] - 1e-4) mono = false;

  rep.measured = gaps.front();
  rep.tolerance = baseline_gap_bound;
  rep.passed = gaps.front() <= baseline_gap_bound && mono && eta_ok;
  std::ostringstream ss;
  ss << "terminal gaps over delta:";
  for (double g : gaps) ss << ' ' << fmt(g);
  if (!mono) ss << " (not nondecreasing)";
  if (!eta_ok) ss << " (filter bound violated)";
  rep.details = ss.str();
  return rep;
}

CheckReport check_assumption_probe(double a, bool expect_clean, const QuadratureSpec& quad) {
  const ObjectiveField J = make_ringed_gaussian(3);
  Vec e1 = Vec::Zero(3);
  e1[0] = 1.0;
  int sign_changes = 0;
  double min_abs = 1e300;
  double prev = 0.0;
  for (int i = 1; i <= 60; ++i) {
    const double r = 0.1 * i;
    const double radial = averaged_gradient(J, r * e1, a, quad).dot(e1);
    min_abs = std::min(min_abs, std::abs(radial));
    if (i > 1 && radial * prev < 0.0) ++sign_changes;
    prev = radial;
  }

  CheckReport rep;
  rep.name = "assumption_probe_a" + fmt(a);
  rep.measured = expect_clean ? min_abs : static_cast<double>(sign_changes);
  rep.tolerance = expect_clean ? 0.0 : 1.0;
  rep.passed = expect_clean ? (min_abs > 1e-6 && sign_changes == 0) : (sign_changes >= 1);
  rep.details = "radial derivative sign changes: " + std::to_string(sign_changes) +
                ", min |radial|: " + fmt(min_abs);
  return rep;
}

CheckReport check_rescale_identity(const ObjectiveField& J, const Vec& x, double a, double tol) {
  const int n = J.dimension;
  const int d = n - 1;
  // z0 is periodic after the rescale; the remaining coordinates hit the
  // |sin| kink at 1/2, so integrate each half with Gauss-Legendre.
  const int m0 = 64, mg = 32;
  const GaussRule gl = gauss_legendre(mg);
  std::vector<std::vector<double>> nodes(d), weights(d);
  for (int i = 0; i < m0; ++i) {
    nodes[0].push_back((i + 0.5) / m0);
    weights[0].push_back(1.0 / m0);
  }
  for (int j = 1; j < d; ++j)
    for (int half = 0; half < 2; ++half)
      for (int i = 0; i < mg; ++i) {
        nodes[j].push_back(0.25 * (gl.nodes[i] + 1.0) + 0.5 * half);
        weights[j].push_back(0.25 * gl.weights[i]);
      }

  std::vector<std::size_t> idx(d, 0);
  Vec acc = Vec::Zero(n), z(d);
  bool done = false;
  while (!done) {
    double w = 1.0;
    for (int j = 0; j < d; ++j) {
      z[j] = nodes[j][idx[j]];
      w *= weights[j][idx[j]];
    }
    const Vec theta = 2.0 * angle_rescale(z);
    const Vec phi = sphere_param(theta);
    acc += (w * J.evaluate(x + a * phi) * gram_sqrt(theta)) * phi;
    done = true;
    for (int j = 0; j < d; ++j) {
      if (++idx[j] < nodes[j].size()) {
        done = false;
        break;
      }
      idx[j] = 0;
    }
  }

  const Vec reference = averaged_gradient(J, x, a) * (a * ball_volume(n)) /
                        (2.0 * std::pow(M_PI, n - 1));
  CheckReport rep;
  rep.name = "rescale_identity_n" + std::to_string(n);
  rep.measured = (acc - reference).norm();
  rep.tolerance = tol;
  rep.passed = rep.measured <= tol;
  rep.details = "cube integral vs scaled surface integral";
  return rep;
}

namespace {

CheckReport simple_report(const std::string& name, double measured, double tol,
                          const std::string& details = "") {
  CheckReport rep;
  rep.name = name;
  rep.measured = measured;
  rep.tolerance = tol;
  rep.passed = measured <= tol;
  rep.details = details;
  return rep;
}

CheckReport scenario_band(const std::string& id, double lo, double hi, bool plant_radius = false) {
  const ScenarioResult res = run_example(id);
  const double r = plant_radius ? res.final_plant_radius : res.final_transformed_radius;
  CheckReport rep;
  rep.name = "scenario_" + id;
  rep.measured = r;
  rep.tolerance = hi;
  rep.passed = r >= lo && r <= hi;
  rep.details = (plant_radius ? "final plant radius" : "final transformed radius") +
                std::string(" in [") + fmt(lo) + ", " + fmt(hi) + "]";
  return rep;
}

std::vector<Vec> segment_points(const Vec& target, int count) {
  std::vector<Vec> pts;
  for (int i = 0; i < count; ++i)
    pts.push_back((static_cast<double>(i) / (count - 1)) * target);
  return pts;
}

}  // namespace

std::vector<CheckReport> check_geometry_suite() {
  std::vector<CheckReport> reps;
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> ang(-8.0, 8.0);

  double unit_err = 0.0, gram_err = 0.0, jac_err = 0.0;
  for (int n = 2; n <= 4; ++n) {
    Vec theta(n - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      for (int j = 0; j < n - 1; ++j) theta[j] = ang(gen);
      unit_err = std::max(unit_err, std::abs(sphere_param(theta).norm() - 1.0));
      const Mat jac = sphere_param_jacobian(theta);
      if (n >= 3)
        gram_err = std::max(
            gram_err,
            std::abs(gram_sqrt(theta) -
                     std::sqrt((jac.transpose() * jac).determinant())));
      // finite-difference Jacobian oracle
      const double h = 1e-6;
      for (int j = 0; j < n - 1; ++j) {
        Vec tp = theta, tm = theta;
        tp[j] += h;
        tm[j] -= h;
        const Vec col = (sphere_param(tp) - sphere_param(tm)) / (2.0 * h);
        jac_err = std::max(jac_err, (jac.col(j) - col).cwiseAbs().maxCoeff());
      }
    }
  }
  reps.push_back(simple_report("geometry_unit_norm", unit_err, 1e-12));
  reps.push_back(simple_report("geometry_gram_cross_check", gram_err, 1e-8));
  reps.push_back(simple_report("geometry_jacobian_fd", jac_err, 1e-6));

  double period_err = 0.0, tangency_err = 0.0;
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k)
      for (int i = 0; i < 100; ++i) {
        const double tau = ang(gen);
        period_err = std::max(
            period_err,
            (dither_curve(tau + 2.0 * M_PI, k, n) - dither_curve(tau, k, n)).norm());
        tangency_err = std::max(
            tangency_err, std::abs(dither_curve(tau, k, n).dot(dither_velocity(tau, k, n))));
      }
  reps.push_back(simple_report("geometry_periodicity", period_err, 1e-12));
  reps.push_back(simple_report("geometry_tangency", tangency_err, 1e-9));

  // Interval-to-cube partition correspondence of the filling curve.
  bool partition_ok = true;
  for (int k = 1; k <= 3 && partition_ok; ++k) {
    const int cells = 1 << k;
    for (int a1 = 0; a1 < cells && partition_ok; ++a1)
      for (int a2 = 0; a2 < cells && partition_ok; ++a2) {
        const double side1 = 1.0 / cells;
        const double side2 = side1 / cells;
        const double sigma = a1 * side1 + a2 * side2 + 0.5 * side2;
        const Vec z = filling_curve(sigma, k, 2);
        partition_ok = z[0] >= a1 * side1 && z[0] <= (a1 + 1) * side1 &&
                       z[1] >= a2 * side1 && z[1] <= (a2 + 1) * side1;
      }
  }
  CheckReport part;
  part.name = "geometry_filling_partition";
  part.passed = partition_ok;
  part.measured = partition_ok ? 1.0 : 0.0;
  part.tolerance = 1.0;
  part.details = "d=2, k in {1,2,3}, interval midpoints";
  reps.push_back(part);
  return reps;
}

std::vector<std::string> suite_selectors() {
  return {"geometry", "identity", "limits",  "claim1",     "cov", "approx",
          "examples", "iss",      "rescale", "assumption", "all"};
}

std::vector<CheckReport> run_suite(const std::string& selector) {
  const bool all = selector == "all";
  std::vector<CheckReport> reps;
  auto want = [&](const std::string& s) { return all || selector == s; };

  if (want("geometry")) {
    auto g = check_geometry_suite();
    reps.insert(reps.end(), g.begin(), g.end());
  }
  if (want("identity")) {
    for (double a : {0.5, 1.0}) {
      reps.push_back(check_divergence_identity(make_ringed_gaussian(3), a, 20, 1e-3, 11));
      reps.push_back(check_divergence_identity(make_perturbed_decay(2), a, 20, 1e-3, 12,
                                               {.angular_nodes = 256, .radial_nodes = 64}));
      reps.push_back(check_divergence_identity(make_flat_bump(4), a, 20, 1e-3, 13,
                                               {.angular_nodes = 24, .radial_nodes = 24}));
    }
  }
  if (want("limits")) {
    const Vec target{{3.0, 3.0, 3.0}};
    reps.push_back(check_field_limit(make_ringed_gaussian(3), 1.0, 1.0, segment_points(target, 6),
                                     {1, 2, 3, 4, 5}, 5e-3));
    reps.push_back(check_filter_limit(3, {1, 2, 3, 4, 5}, 1e-2));
  }
  if (want("claim1")) {
    const auto plane = [](const Vec& z) { return z[0] + z[1]; };
    const auto wave = [](const Vec& z) {
      return std::sin(2.0 * M_PI * z[0]) * std::sin(2.0 * M_PI * z[1]);
    };
    for (int k : {2, 3, 4}) {
      reps.push_back(check_filling_bound(plane, std::sqrt(2.0), 2, k));
      reps.push_back(check_filling_bound(wave, 2.0 * M_PI * std::sqrt(2.0), 2, k));
    }
  }
  if (want("cov")) {
    reps.push_back(check_change_of_variables(example_scenario("ex2_large_a"), 50.0, 1e-5));
    reps.push_back(check_change_of_variables(example_scenario("ex1_small_a"), 50.0, 1e-5));
  }
  if (want("approx")) {
    ControlParams p{.n = 3, .a = 1.0, .b = 1.0, .h = 1.0, .omega = 1.0, .k = 2,
                    .filter_enabled = true};
    const Vec xt0 = to_transformed(Vec{{3.0, 3.0, 3.0}}, 0.0, p);
    reps.push_back(check_trajectory_approx(make_ringed_gaussian(3), p, xt0, 30.0, {1.0, 5.0, 20.0},
                                           {2, 3, 4}, 0.1, {.angular_nodes = 32}));
  }
  if (want("examples")) {
    reps.push_back(scenario_band("ex1_small_a", 3.14, 3.44));
    reps.push_back(scenario_band("ex1_large_a", 0.0, 0.2));
    reps.push_back(scenario_band("ex2_small_a", 2.52, 2.82));
    reps.push_back(scenario_band("ex2_large_a", 0.0, 0.3));
    reps.push_back(scenario_band("ex3", 0.8, 1.2, /*plant_radius=*/true));
  }
  if (want("iss")) reps.push_back(check_iss_behavior({0.0, 0.05, 0.2}, 0.02));
  if (want("rescale")) {
    reps.push_back(check_rescale_identity(make_ringed_gaussian(3), Vec{{0.5, -0.3, 1.2}}, 1.0, 1e-6));
    reps.push_back(check_rescale_identity(make_perturbed_decay(2), Vec{{1.0, 0.5}}, 0.4, 1e-6));
  }
  if (want("assumption")) {
    reps.push_back(check_assumption_probe(1.0, true));
    reps.push_back(check_assumption_probe(0.5, false));
  }
  if (reps.empty()) throw std::invalid_argument("unknown suite selector: " + selector);
  return reps;
}

}  // namespace divseek
