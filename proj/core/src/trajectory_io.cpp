#include "divseek/trajectory_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace divseek {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj, StateFrame frame) {
  const int n = traj.params.n;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);

  out << "t";
  for (int i = 1; i <= n; ++i) out << ",x" << i;
  out << ",eta,y_hat";
  for (int i = 1; i <= n; ++i) out << ",xt" << i;
  out << "\n";

  for (std::size_t r = 0; r < traj.times.size(); ++r) {
    const double t = traj.times[r];
    const Vec& s = traj.states[r];
    Vec plant, transformed;
    switch (frame) {
      case StateFrame::plant:
        plant = s;
        transformed = to_transformed(s, t, traj.params);
        break;
      case StateFrame::transformed:
        plant = from_transformed(s, t, traj.params);
        transformed = s;
        break;
      case StateFrame::averaged:
        plant = s;
        transformed = s;
        break;
    }
    out << format_double(t);
    for (int i = 0; i < n; ++i) out << ',' << format_double(plant[i]);
    out << ',' << format_double(traj.filter_states[r]) << ',' << format_double(traj.outputs[r]);
    for (int i = 0; i < n; ++i) out << ',' << format_double(transformed[i]);
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

TrajectoryFile read_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trajectory file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty trajectory file: " + path);
  const auto header = split_csv(line);
  if (header.size() < 5 || header[0] != "t")
    throw std::runtime_error("unrecognized trajectory header in " + path);
  const int n = static_cast<int>((header.size() - 3) / 2);

  TrajectoryFile file;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (static_cast<int>(fields.size()) != 2 * n + 3)
      throw std::runtime_error("malformed trajectory row in " + path);
    file.times.push_back(std::stod(fields[0]));
    Vec x(n), xt(n);
    for (int i = 0; i < n; ++i) x[i] = std::stod(fields[1 + i]);
    file.filter_states.push_back(std::stod(fields[1 + n]));
    file.outputs.push_back(std::stod(fields[2 + n]));
    for (int i = 0; i < n; ++i) xt[i] = std::stod(fields[3 + n + i]);
    file.plant_states.push_back(std::move(x));
    file.transformed_states.push_back(std::move(xt));
  }
  return file;
}

void write_grid_csv(const std::string& path, const std::vector<std::vector<double>>& coords,
                    const std::vector<double>& values) {
  if (coords.size() != values.size())
    throw std::invalid_argument("grid: coordinate/value count mismatch");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  const std::size_t naxes = coords.empty() ? 0 : coords.front().size();
  for (std::size_t i = 0; i < naxes; ++i) out << "axis" << i + 1 << ',';
  out << "value\n";
  for (std::size_t r = 0; r < values.size(); ++r) {
    for (double c : coords[r]) out << format_double(c) << ',';
    out << format_double(values[r]) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace divseek
