#include "config.hpp"

#include <fstream>

namespace divseek::cli {

using nlohmann::json;

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& context) {
  if (!obj.is_object()) throw config_error(context + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw config_error(context + ": unknown key `" + key + "`");
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config parse failure: ") + e.what());
  }
}

namespace {

double require_number(const json& obj, const char* key, const std::string& context) {
  if (!obj.contains(key)) throw config_error(context + ": missing key `" + key + "`");
  if (!obj.at(key).is_number()) throw config_error(context + ": key `" + key + "` must be a number");
  return obj.at(key).get<double>();
}

double number_or(const json& obj, const char* key, double def) {
  return obj.contains(key) ? obj.at(key).get<double>() : def;
}

ObjectiveField parse_objective(const json& obj) {
  check_keys(obj, {"id", "params"}, "objective");
  if (!obj.contains("id")) throw config_error("objective: missing key `id`");
  try {
    return builtin_objective(obj.at("id").get<std::string>(),
                             obj.contains("params") ? obj.at("params") : json::object());
  } catch (const std::invalid_argument& e) {
    throw config_error(std::string("objective: ") + e.what());
  }
}

ControlParams parse_control(const json& obj) {
  check_keys(obj, {"n", "a", "b", "h", "omega", "k", "filter_enabled"}, "control");
  ControlParams p;
  p.n = static_cast<int>(require_number(obj, "n", "control"));
  p.a = require_number(obj, "a", "control");
  p.b = require_number(obj, "b", "control");
  p.h = require_number(obj, "h", "control");
  p.omega = require_number(obj, "omega", "control");
  p.k = static_cast<int>(require_number(obj, "k", "control"));
  if (obj.contains("filter_enabled")) p.filter_enabled = obj.at("filter_enabled").get<bool>();
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw config_error(e.what());
  }
  return p;
}

IntegratorSpec parse_integrator(const json& obj) {
  check_keys(obj, {"dt", "steps_per_fast_period", "t_final", "record_stride"}, "integrator");
  IntegratorSpec spec;
  spec.t_final = require_number(obj, "t_final", "integrator");
  spec.dt = number_or(obj, "dt", 0.0);
  spec.steps_per_fast_period = static_cast<int>(number_or(obj, "steps_per_fast_period", 64));
  spec.record_stride = static_cast<int>(number_or(obj, "record_stride", 1));
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw config_error(e.what());
  }
  return spec;
}

Vec parse_vector(const json& arr, const std::string& context) {
  if (!arr.is_array() || arr.empty()) throw config_error(context + ": expected a nonempty array");
  Vec v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) v[static_cast<long>(i)] = arr[i].get<double>();
  return v;
}

}  // namespace

DisturbanceSpec parse_disturbance(const json& obj) {
  check_keys(obj, {"kind", "value", "amplitude", "frequency", "phase", "bound", "dwell", "seed"},
             "disturbance");
  const std::string kind = obj.contains("kind") ? obj.at("kind").get<std::string>() : "zero";
  try {
    if (kind == "zero") return DisturbanceSpec::zero();
    if (kind == "constant")
      return DisturbanceSpec::constant(require_number(obj, "value", "disturbance"));
    if (kind == "sinusoid")
      return DisturbanceSpec::sinusoid(require_number(obj, "amplitude", "disturbance"),
                                       require_number(obj, "frequency", "disturbance"),
                                       number_or(obj, "phase", 0.0));
    if (kind == "piecewise_uniform")
      return DisturbanceSpec::piecewise_uniform(
          require_number(obj, "bound", "disturbance"),
          require_number(obj, "dwell", "disturbance"),
          static_cast<std::uint64_t>(number_or(obj, "seed", 0)));
  } catch (const std::invalid_argument& e) {
    throw config_error(e.what());
  }
  throw config_error("disturbance: unknown kind `" + kind + "`");
}

QuadratureSpec parse_quadrature(const json& obj) {
  check_keys(obj, {"angular_nodes", "radial_nodes", "curve_nodes", "mode", "seed",
                   "monte_carlo_samples"},
             "quadrature");
  QuadratureSpec quad;
  quad.angular_nodes = static_cast<int>(number_or(obj, "angular_nodes", quad.angular_nodes));
  quad.radial_nodes = static_cast<int>(number_or(obj, "radial_nodes", quad.radial_nodes));
  quad.curve_nodes = static_cast<long>(number_or(obj, "curve_nodes", 0));
  quad.seed = static_cast<std::uint64_t>(number_or(obj, "seed", 0));
  quad.monte_carlo_samples =
      static_cast<long>(number_or(obj, "monte_carlo_samples", quad.monte_carlo_samples));
  if (obj.contains("mode")) {
    const std::string mode = obj.at("mode").get<std::string>();
    if (mode == "tensor_gauss")
      quad.mode = QuadratureSpec::Mode::tensor_gauss;
    else if (mode == "monte_carlo")
      quad.mode = QuadratureSpec::Mode::monte_carlo;
    else
      throw config_error("quadrature: unknown mode `" + mode + "`");
  }
  try {
    quad.validate();
  } catch (const std::invalid_argument& e) {
    throw config_error(e.what());
  }
  return quad;
}

RunConfig parse_run_config(const json& cfg) {
  check_keys(cfg,
             {"scenario", "objective", "control", "disturbance", "integrator", "initial", "system",
              "quadrature"},
             "config");
  RunConfig run;
  if (cfg.contains("scenario")) {
    try {
      run.scenario = example_scenario(cfg.at("scenario").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw config_error(std::string("scenario: ") + e.what());
    }
  } else {
    if (!cfg.contains("objective") || !cfg.contains("control") || !cfg.contains("integrator") ||
        !cfg.contains("initial"))
      throw config_error("config: need `objective`, `control`, `integrator`, and `initial` "
                         "(or a `scenario` shortcut)");
    run.scenario.id = "custom";
  }
  if (cfg.contains("objective")) run.scenario.objective = parse_objective(cfg.at("objective"));
  if (cfg.contains("control")) run.scenario.params = parse_control(cfg.at("control"));
  if (cfg.contains("integrator")) run.scenario.integrator = parse_integrator(cfg.at("integrator"));
  if (cfg.contains("disturbance"))
    run.scenario.disturbance = parse_disturbance(cfg.at("disturbance"));
  if (cfg.contains("initial")) {
    check_keys(cfg.at("initial"), {"x", "eta"}, "initial");
    if (!cfg.at("initial").contains("x")) throw config_error("initial: missing key `x`");
    run.scenario.x0 = parse_vector(cfg.at("initial").at("x"), "initial.x");
    run.scenario.eta0 = number_or(cfg.at("initial"), "eta", 0.0);
  }
  if (cfg.contains("quadrature")) run.quadrature = parse_quadrature(cfg.at("quadrature"));
  if (cfg.contains("system")) {
    const std::string sys = cfg.at("system").get<std::string>();
    if (sys == "closed_loop")
      run.system = SystemKind::closed_loop;
    else if (sys == "transformed")
      run.system = SystemKind::transformed;
    else if (sys == "averaged")
      run.system = SystemKind::averaged;
    else
      throw config_error("system: unknown value `" + sys + "`");
  }
  if (run.scenario.x0.size() != run.scenario.params.n)
    throw config_error("initial.x: dimension does not match control.n");
  if (run.scenario.objective.dimension != run.scenario.params.n)
    throw config_error("objective: dimension does not match control.n");
  return run;
}

FieldRequest parse_field_request(const json& cfg) {
  check_keys(cfg, {"objective", "a", "axes", "quantity", "quadrature"}, "field request");
  if (!cfg.contains("objective") || !cfg.contains("axes"))
    throw config_error("field request: need `objective` and `axes`");
  FieldRequest req;
  req.objective = parse_objective(cfg.at("objective"));
  req.a = number_or(cfg, "a", 0.0);
  if (req.a < 0.0) throw config_error("field request: key `a` must be >= 0");
  if (cfg.contains("quantity")) {
    req.quantity = cfg.at("quantity").get<std::string>();
    if (req.quantity != "value" && req.quantity != "gradient_norm")
      throw config_error("field request: unknown quantity `" + req.quantity + "`");
  }
  if (cfg.contains("quadrature")) req.quadrature = parse_quadrature(cfg.at("quadrature"));

  const json& axes = cfg.at("axes");
  if (!axes.is_array() || axes.empty())
    throw config_error("field request: `axes` must be a nonempty array");
  int swept = 0;
  for (const auto& ax : axes) {
    FieldAxis fa;
    if (ax.contains("fixed")) {
      check_keys(ax, {"fixed"}, "axes entry");
      fa.fixed = ax.at("fixed").get<double>();
    } else {
      check_keys(ax, {"min", "max", "count"}, "axes entry");
      fa.swept = true;
      fa.min = require_number(ax, "min", "axes entry");
      fa.max = require_number(ax, "max", "axes entry");
      fa.count = static_cast<int>(require_number(ax, "count", "axes entry"));
      if (fa.count < 2) throw config_error("axes entry: `count` must be >= 2");
      ++swept;
    }
    req.axes.push_back(fa);
  }
  if (swept < 1 || swept > 2)
    throw config_error("field request: need 1 or 2 swept axes, got " + std::to_string(swept));
  if (static_cast<int>(req.axes.size()) != req.objective.dimension)
    throw config_error("field request: `axes` length must match the objective dimension");
  return req;
}

}  // namespace divseek::cli
