#pragma once

#include <string>
#include <vector>

#include "divseek/simulate.hpp"

namespace divseek {

// Which coordinates Trajectory::states holds; the writer derives the other
// frame through the sphere-curve shift so files always carry both.
enum class StateFrame { plant, transformed, averaged };

// CSV with header t,x1..xn,eta,y_hat,xt1..xtn and 17-significant-digit
// floats (exact round trip through the bundled reader).
void write_trajectory_csv(const std::string& path, const Trajectory& traj, StateFrame frame);

struct TrajectoryFile {
  std::vector<double> times;
  std::vector<Vec> plant_states;
  std::vector<double> filter_states;
  std::vector<double> outputs;
  std::vector<Vec> transformed_states;
};

TrajectoryFile read_trajectory_csv(const std::string& path);

// Row-major grid CSV: one column per swept axis, then the value.
void write_grid_csv(const std::string& path, const std::vector<std::vector<double>>& coords,
                    const std::vector<double>& values);

// 17-significant-digit decimal rendering used by all CSV output.
std::string format_double(double v);

}  // namespace divseek
