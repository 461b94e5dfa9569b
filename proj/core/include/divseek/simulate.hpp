#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "divseek/averaging.hpp"
#include "divseek/objective.hpp"

namespace divseek {

// All scheme constants. a is the dither radius (and the averaging radius),
// b the probe gain, h the filter rate, omega the dither frequency, k the
// frequency-stacking integer.
struct ControlParams {
  int n = 2;
  double a = 1.0;
  double b = 1.0;
  double h = 1.0;
  double omega = 1.0;
  int k = 1;
  bool filter_enabled = true;

  void validate() const;
};

// Bounded measurement disturbance d(t) with |d(t)| <= bound for all t.
// piecewise_uniform draws one value per dwell interval from a counter-based
// generator keyed on (seed, floor(t / dwell)), so every simulation that
// shares the spec sees bitwise-identical d(t) regardless of step sequence.
struct DisturbanceSpec {
  enum class Kind { zero, constant, sinusoid, piecewise_uniform };

  Kind kind = Kind::zero;
  double value = 0.0;      // constant
  double amplitude = 0.0;  // sinusoid
  double frequency = 0.0;
  double phase = 0.0;
  double bound = 0.0;  // sup-norm bound; also the piecewise range
  double dwell = 1.0;
  std::uint64_t seed = 0;

  static DisturbanceSpec zero();
  static DisturbanceSpec constant(double c);
  static DisturbanceSpec sinusoid(double amplitude, double frequency, double phase = 0.0);
  static DisturbanceSpec piecewise_uniform(double bound, double dwell, std::uint64_t seed);

  double sample(double t) const;
};

struct SimState {
  Vec x;
  double eta = 0.0;
  double t = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Vec> states;
  std::vector<double> filter_states;
  std::vector<double> outputs;  // y_hat samples
  ControlParams params;
};

// Fixed-step integration plan. When dt is 0 it is derived from
// steps_per_fast_period and the fastest dither angle.
struct IntegratorSpec {
  double dt = 0.0;
  int steps_per_fast_period = 64;
  double t_final = 0.0;
  int record_stride = 1;

  void validate() const;
};

struct divergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dt = 2pi / (omega * max(1, 2^{(n-2)k-1}) * steps_per_fast_period).
double default_step(const ControlParams& p, int steps_per_fast_period = 64);

// y_hat = J(x) + d(t)
double measured_output(const ObjectiveField& J, const Vec& x, const DisturbanceSpec& dist,
                       double t);

// Feedback law a*omega*u(omega t) + (y_hat - eta)*b*v(omega t); eta is
// replaced by 0 when the filter is disabled.
Vec control_input(const ControlParams& p, double t, double y_hat, double eta);

// Right-hand sides of the three systems, over the packed state (x, eta).
// closed_loop: plant coordinates. transformed: x shifted by the sphere curve.
// The averaged flow has no filter state; its eta slot is carried as 0.
Vec closed_loop_rhs(const SimState& s, const ObjectiveField& J, const ControlParams& p,
                    const DisturbanceSpec& dist);
Vec transformed_rhs(const SimState& s, const ObjectiveField& J, const ControlParams& p,
                    const DisturbanceSpec& dist);

// a*b*c*grad(averaged objective) + b*d(t)*v(omega t); pass dist = nullptr for
// the undisturbed flow, or dbar for a direct vector disturbance.
Vec averaged_flow_rhs(const Vec& xbar, double t, const ObjectiveField& J, const ControlParams& p,
                      const QuadratureSpec& quad, const DisturbanceSpec* dist = nullptr,
                      const Vec* dbar = nullptr);

// Change of variables between plant and transformed coordinates.
Vec to_transformed(const Vec& x, double t, const ControlParams& p);
Vec from_transformed(const Vec& xt, double t, const ControlParams& p);

// Classical RK4 with fixed step over a generic packed state. Aborts with
// divergence_error when any component exceeds 1e9 or the rhs is non-finite.
struct RawTrajectory {
  std::vector<double> times;
  std::vector<Vec> states;
};
RawTrajectory integrate(const std::function<Vec(double, const Vec&)>& rhs, const Vec& y0,
                        double t0, double dt, double t_final, int record_stride = 1);

// Drivers: integrate one of the three systems and record a Trajectory.
Trajectory simulate_closed_loop(const ObjectiveField& J, const ControlParams& p,
                                const DisturbanceSpec& dist, const Vec& x0, double eta0,
                                const IntegratorSpec& spec);
Trajectory simulate_transformed(const ObjectiveField& J, const ControlParams& p,
                                const DisturbanceSpec& dist, const Vec& xt0, double eta0,
                                const IntegratorSpec& spec);
Trajectory simulate_averaged(const ObjectiveField& J, const ControlParams& p,
                             const DisturbanceSpec& dist, const Vec& x0,
                             const IntegratorSpec& spec, const QuadratureSpec& quad = {});

}  // namespace divseek
