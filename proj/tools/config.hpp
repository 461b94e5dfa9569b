#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "divseek/verify.hpp"

namespace divseek::cli {

// Thrown for any configuration problem; the message names the offending key.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejects unknown keys so typos in scientific parameters fail loudly.
void check_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                const std::string& context);

nlohmann::json load_json(const std::string& path);

// Which system a scenario config integrates.
enum class SystemKind { closed_loop, transformed, averaged };

struct RunConfig {
  Scenario scenario;
  SystemKind system = SystemKind::closed_loop;
  QuadratureSpec quadrature;
};

// Full scenario config. A top-level "scenario" key seeds the config from a
// named example; any other section then overrides it.
RunConfig parse_run_config(const nlohmann::json& cfg);

struct FieldAxis {
  bool swept = false;
  double fixed = 0.0;
  double min = 0.0, max = 0.0;
  int count = 0;
};

struct FieldRequest {
  ObjectiveField objective;
  double a = 0.0;  // 0 means the raw objective
  std::vector<FieldAxis> axes;
  std::string quantity = "value";  // value | gradient_norm
  QuadratureSpec quadrature;
};

FieldRequest parse_field_request(const nlohmann::json& cfg);

QuadratureSpec parse_quadrature(const nlohmann::json& obj);
DisturbanceSpec parse_disturbance(const nlohmann::json& obj);

}  // namespace divseek::cli
