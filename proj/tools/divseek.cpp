#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "divseek/trajectory_io.hpp"

namespace {

using namespace divseek;
using cli::config_error;
using cli::RunConfig;
using cli::SystemKind;

constexpr int kExitError = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDiverged = 3;

int cmd_simulate(const std::string& config_path, const std::string& out_path) {
  const RunConfig run = cli::parse_run_config(cli::load_json(config_path));
  const Scenario& sc = run.scenario;
  const ControlParams& p = sc.params;

  Trajectory traj;
  StateFrame frame;
  switch (run.system) {
    case SystemKind::closed_loop:
      traj = simulate_closed_loop(sc.objective, p, sc.disturbance, sc.x0, sc.eta0, sc.integrator);
      frame = StateFrame::plant;
      break;
    case SystemKind::transformed:
      traj = simulate_transformed(sc.objective, p, sc.disturbance,
                                  to_transformed(sc.x0, 0.0, p), sc.eta0, sc.integrator);
      frame = StateFrame::transformed;
      break;
    case SystemKind::averaged:
      traj = simulate_averaged(sc.objective, p, sc.disturbance, sc.x0, sc.integrator,
                               run.quadrature);
      frame = StateFrame::averaged;
      break;
  }
  write_trajectory_csv(out_path, traj, frame);

  const double t_end = traj.times.back();
  const Vec& last = traj.states.back();
  const Vec xt = frame == StateFrame::plant ? to_transformed(last, t_end, p) : last;
  const Vec x = frame == StateFrame::transformed ? from_transformed(last, t_end, p) : last;
  std::cout << "t_final=" << format_double(t_end)
            << " |xt|=" << format_double(xt.norm())
            << " J(x)=" << format_double(sc.objective.evaluate(x))
            << " Jbar_a(xt)=" << format_double(averaged_objective(sc.objective, xt, p.a,
                                                                  run.quadrature))
            << "\n";
  std::cout << "wrote " << out_path << " (" << traj.times.size() << " rows)\n";
  return 0;
}

int cmd_field(const std::string& config_path, const std::string& out_path) {
  const cli::FieldRequest req = cli::parse_field_request(cli::load_json(config_path));
  const int n = req.objective.dimension;

  std::vector<int> swept;
  for (int i = 0; i < n; ++i)
    if (req.axes[i].swept) swept.push_back(i);
  const int rows = req.axes[swept[0]].count;
  const int cols = swept.size() == 2 ? req.axes[swept[1]].count : 1;

  auto axis_value = [&](const cli::FieldAxis& ax, int i) {
    return ax.min + (ax.max - ax.min) * i / static_cast<double>(ax.count - 1);
  };
  auto eval = [&](const Vec& x) {
    if (req.quantity == "value")
      return req.a == 0.0 ? req.objective.evaluate(x)
                          : averaged_objective(req.objective, x, req.a, req.quadrature);
    if (req.a > 0.0) return averaged_gradient(req.objective, x, req.a, req.quadrature).norm();
    return req.objective.analytic_gradient
               ? req.objective.analytic_gradient(x).norm()
               : fd_gradient(req.objective.evaluate, x, 1e-5).norm();
  };

  Vec x(n);
  for (int i = 0; i < n; ++i) x[i] = req.axes[i].fixed;
  std::vector<std::vector<double>> coords;
  std::vector<double> values;
  coords.reserve(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) {
    x[swept[0]] = axis_value(req.axes[swept[0]], i);
    for (int j = 0; j < cols; ++j) {
      std::vector<double> c{x[swept[0]]};
      if (swept.size() == 2) {
        x[swept[1]] = axis_value(req.axes[swept[1]], j);
        c.push_back(x[swept[1]]);
      }
      coords.push_back(std::move(c));
      values.push_back(eval(x));
    }
  }
  write_grid_csv(out_path, coords, values);
  std::cout << "wrote " << out_path << " (" << values.size() << " rows)\n";
  return 0;
}

int cmd_verify(const std::string& selector) {
  const auto reports = run_suite(selector);
  bool all_passed = true;
  for (const auto& rep : reports) {
    std::cout << rep.to_line() << "\n";
    all_passed = all_passed && rep.passed;
  }
  return all_passed ? 0 : kExitError;
}

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> vals;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) vals.push_back(std::stod(tok));
  if (vals.empty()) throw config_error("sweep: value list is empty");
  return vals;
}

struct SweepRow {
  double value = 0.0;
  double final_xt_radius = std::numeric_limits<double>::quiet_NaN();
  double final_x_radius = std::numeric_limits<double>::quiet_NaN();
  double objective_gap = std::numeric_limits<double>::quiet_NaN();
  double sup_dev = std::numeric_limits<double>::quiet_NaN();
  std::string status = "ok";
};

int cmd_sweep(const std::string& config_path, const std::string& axis, const std::string& values,
              const std::string& out_path, int jobs, std::uint64_t seed, bool compare_averaged) {
  if (axis != "omega" && axis != "k" && axis != "a" && axis != "delta")
    throw config_error("sweep: axis must be one of omega, k, a, delta");
  const RunConfig base = cli::parse_run_config(cli::load_json(config_path));
  const std::vector<double> vals = parse_values(values);

  if (jobs <= 0) {
    if (const char* env = std::getenv("DIVSEEK_DEFAULT_JOBS")) jobs = std::atoi(env);
    if (jobs <= 0) jobs = 1;
  }

  std::vector<SweepRow> rows(vals.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= vals.size()) return;
      SweepRow& row = rows[i];
      row.value = vals[i];
      try {
        Scenario sc = base.scenario;
        if (axis == "omega")
          sc.params.omega = vals[i];
        else if (axis == "k")
          sc.params.k = static_cast<int>(std::lround(vals[i]));
        else if (axis == "a")
          sc.params.a = vals[i];
        else
          sc.disturbance = vals[i] > 0.0
                               ? DisturbanceSpec::piecewise_uniform(vals[i], 0.1, seed + i)
                               : DisturbanceSpec::zero();
        sc.params.validate();
        const ScenarioResult res = run_scenario(sc, base.quadrature);
        row.final_xt_radius = res.final_transformed_radius;
        row.final_x_radius = res.final_plant_radius;
        row.objective_gap = res.objective_gap;
        if (compare_averaged) {
          QuadratureSpec quad = base.quadrature;
          quad.angular_nodes = std::min(quad.angular_nodes, 32);
          const RawTrajectory flow = integrate(
              [&](double t, const Vec& y) {
                return averaged_flow_rhs(y, t, sc.objective, sc.params, quad, nullptr, nullptr);
              },
              to_transformed(sc.x0, 0.0, sc.params), 0.0, 0.02, sc.integrator.t_final, 10);
          double sup = 0.0;
          const Trajectory& traj = res.trajectory;
          for (std::size_t r = 0; r < traj.times.size(); ++r) {
            const double t = traj.times[r];
            // nearest recorded averaged-flow sample (0.2 time units apart)
            const std::size_t f = std::min(
                flow.times.size() - 1, static_cast<std::size_t>(std::lround(t / 0.2)));
            sup = std::max(sup, (traj.states[r] - flow.states[f]).norm());
          }
          row.sup_dev = sup;
        }
      } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
      }
    }
  };
  std::vector<std::future<void>> pool;
  for (int j = 0; j < std::min<int>(jobs, static_cast<int>(vals.size())); ++j)
    pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << axis << ",final_xt_radius,final_x_radius,objective_gap";
  if (compare_averaged) out << ",sup_dev_vs_averaged";
  out << ",status\n";
  for (const SweepRow& row : rows) {
    out << format_double(row.value) << ',' << format_double(row.final_xt_radius) << ','
        << format_double(row.final_x_radius) << ',' << format_double(row.objective_gap);
    if (compare_averaged) out << ',' << format_double(row.sup_dev);
    out << ',' << row.status << "\n";
  }
  std::cout << "wrote " << out_path << " (" << rows.size() << " rows)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divergence-theorem extremum seeking simulator"};
  app.require_subcommand(1);

  std::string config_path, out_path, suite = "all", axis, values;
  int jobs = 0;
  std::uint64_t seed = 0;
  bool compare_averaged = false;

  auto* sim = app.add_subcommand("simulate", "integrate a scenario and write a trajectory CSV");
  sim->add_option("--config", config_path, "scenario config (JSON)")->required();
  sim->add_option("--out", out_path, "output trajectory CSV")->required();

  auto* field = app.add_subcommand("field", "export a grid of the (averaged) objective");
  field->add_option("--config", config_path, "field grid request (JSON)")->required();
  field->add_option("--out", out_path, "output grid CSV")->required();

  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--suite", suite, "check group (default: all)");

  auto* sweep = app.add_subcommand("sweep", "run a scenario once per parameter value");
  sweep->add_option("--config", config_path, "base scenario config (JSON)")->required();
  sweep->add_option("--axis", axis, "swept parameter: omega, k, a, delta")->required();
  sweep->add_option("--values", values, "comma-separated value list")->required();
  sweep->add_option("--out", out_path, "output summary CSV")->required();
  sweep->add_option("--jobs", jobs, "parallel runs (default: DIVSEEK_DEFAULT_JOBS or 1)");
  sweep->add_option("--seed", seed, "seed base for generated disturbances");
  sweep->add_flag("--compare-averaged", compare_averaged,
                  "also report sup deviation from the averaged gradient flow");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(config_path, out_path);
    if (field->parsed()) return cmd_field(config_path, out_path);
    if (verify->parsed()) return cmd_verify(suite);
    return cmd_sweep(config_path, axis, values, out_path, jobs, seed, compare_averaged);
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const divseek::divergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDiverged;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
