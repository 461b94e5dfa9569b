#include "divseek/simulate.hpp"

#include <cmath>

#include "divseek/rng.hpp"

namespace divseek {

void ControlParams::validate() const {
  if (n < 2) throw std::invalid_argument("control: n must be >= 2");
  if (!(a > 0.0)) throw std::invalid_argument("control: a must be positive");
  if (!(b > 0.0)) throw std::invalid_argument("control: b must be positive");
  if (!(h > 0.0)) throw std::invalid_argument("control: h must be positive");
  if (!(omega > 0.0)) throw std::invalid_argument("control: omega must be positive");
  if (k < 1) throw std::invalid_argument("control: k must be >= 1");
}

void IntegratorSpec::validate() const {
  if (!(t_final > 0.0)) throw std::invalid_argument("integrator: t_final must be positive");
  if (record_stride < 1) throw std::invalid_argument("integrator: record_stride must be >= 1");
  if (dt < 0.0) throw std::invalid_argument("integrator: dt must be nonnegative");
  if (dt == 0.0 && steps_per_fast_period < 32)
    throw std::invalid_argument("integrator: steps_per_fast_period must be >= 32");
}

DisturbanceSpec DisturbanceSpec::zero() { return {}; }

DisturbanceSpec DisturbanceSpec::constant(double c) {
  DisturbanceSpec d;
  d.kind = Kind::constant;
  d.value = c;
  d.bound = std::abs(c);
  return d;
}

DisturbanceSpec DisturbanceSpec::sinusoid(double amplitude, double frequency, double phase) {
  DisturbanceSpec d;
  d.kind = Kind::sinusoid;
  d.amplitude = amplitude;
  d.frequency = frequency;
  d.phase = phase;
  d.bound = std::abs(amplitude);
  return d;
}

DisturbanceSpec DisturbanceSpec::piecewise_uniform(double bound, double dwell,
                                                   std::uint64_t seed) {
  if (bound < 0.0) throw std::invalid_argument("disturbance: bound must be >= 0");
  if (!(dwell > 0.0)) throw std::invalid_argument("disturbance: dwell must be positive");
  DisturbanceSpec d;
  d.kind = Kind::piecewise_uniform;
  d.bound = bound;
  d.dwell = dwell;
  d.seed = seed;
  return d;
}

double DisturbanceSpec::sample(double t) const {
  switch (kind) {
    case Kind::zero:
      return 0.0;
    case Kind::constant:
      return value;
    case Kind::sinusoid:
      return amplitude * std::sin(frequency * t + phase);
    case Kind::piecewise_uniform: {
      const double idx = std::floor(t / dwell);
      const double u = to_unit_double(splitmix64(hash_combine(seed, idx)));
      return bound * (2.0 * u - 1.0);
    }
  }
  return 0.0;
}

double default_step(const ControlParams& p, int steps_per_fast_period) {
  p.validate();
  const double fast = p.n == 2 ? 1.0 : std::max(1.0, std::ldexp(1.0, (p.n - 2) * p.k - 1));
  return 2.0 * M_PI / (p.omega * fast * steps_per_fast_period);
}

double measured_output(const ObjectiveField& J, const Vec& x, const DisturbanceSpec& dist,
                       double t) {
  return J.evaluate(x) + dist.sample(t);
}

Vec control_input(const ControlParams& p, double t, double y_hat, double eta) {
  const double tau = p.omega * t;
  const double eta_eff = p.filter_enabled ? eta : 0.0;
  return p.a * p.omega * dither_velocity(tau, p.k, p.n) +
         (y_hat - eta_eff) * p.b * dither_probe(tau, p.k, p.n);
}

namespace {

double checked_value(const ObjectiveField& J, const Vec& x) {
  const double y = J.evaluate(x);
  if (!std::isfinite(y)) throw divergence_error("objective returned a non-finite value");
  return y;
}

Vec pack_rates(const Vec& xdot, double etadot) {
  Vec out(xdot.size() + 1);
  out.head(xdot.size()) = xdot;
  out[xdot.size()] = etadot;
  return out;
}

}  // namespace

Vec closed_loop_rhs(const SimState& s, const ObjectiveField& J, const ControlParams& p,
                    const DisturbanceSpec& dist) {
  const double y_hat = checked_value(J, s.x) + dist.sample(s.t);
  const Vec xdot = control_input(p, s.t, y_hat, s.eta);
  const double etadot = p.filter_enabled ? -p.h * s.eta + p.h * y_hat : 0.0;
  return pack_rates(xdot, etadot);
}

Vec transformed_rhs(const SimState& s, const ObjectiveField& J, const ControlParams& p,
                    const DisturbanceSpec& dist) {
  const double tau = p.omega * s.t;
  const double y_hat = checked_value(J, s.x + p.a * dither_curve(tau, p.k, p.n)) +
                       dist.sample(s.t);
  const double eta_eff = p.filter_enabled ? s.eta : 0.0;
  const Vec xdot = (y_hat - eta_eff) * p.b * dither_probe(tau, p.k, p.n);
  const double etadot = p.filter_enabled ? -p.h * s.eta + p.h * y_hat : 0.0;
  return pack_rates(xdot, etadot);
}

Vec averaged_flow_rhs(const Vec& xbar, double t, const ObjectiveField& J, const ControlParams& p,
                      const QuadratureSpec& quad, const DisturbanceSpec* dist, const Vec* dbar) {
  Vec rate = p.a * p.b * gradient_scale(p.n) * averaged_gradient(J, xbar, p.a, quad);
  if (dist != nullptr)
    rate += p.b * dist->sample(t) * dither_probe(p.omega * t, p.k, p.n);
  if (dbar != nullptr) rate += p.b * (*dbar);
  return rate;
}

Vec to_transformed(const Vec& x, double t, const ControlParams& p) {
  return x - p.a * dither_curve(p.omega * t, p.k, p.n);
}

Vec from_transformed(const Vec& xt, double t, const ControlParams& p) {
  return xt + p.a * dither_curve(p.omega * t, p.k, p.n);
}

RawTrajectory integrate(const std::function<Vec(double, const Vec&)>& rhs, const Vec& y0,
                        double t0, double dt, double t_final, int record_stride) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
  if (record_stride < 1) throw std::invalid_argument("integrate: record_stride must be >= 1");
  const long steps = static_cast<long>(std::ceil((t_final - t0) / dt - 1e-12));
  if (steps < 1) throw std::invalid_argument("integrate: empty time span");

  RawTrajectory out;
  out.times.reserve(steps / record_stride + 2);
  out.states.reserve(steps / record_stride + 2);
  Vec y = y0;
  out.times.push_back(t0);
  out.states.push_back(y);

  for (long i = 0; i < steps; ++i) {
    const double t = t0 + i * dt;
    const Vec k1 = rhs(t, y);
    const Vec k2 = rhs(t + 0.5 * dt, y + 0.5 * dt * k1);
    const Vec k3 = rhs(t + 0.5 * dt, y + 0.5 * dt * k2);
    const Vec k4 = rhs(t + dt, y + dt * k3);
    y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!y.allFinite() || y.cwiseAbs().maxCoeff() > 1e9)
      throw divergence_error("integrate: state diverged at t=" + std::to_string(t + dt));
    if ((i + 1) % record_stride == 0 || i + 1 == steps) {
      out.times.push_back(t0 + (i + 1) * dt);
      out.states.push_back(y);
    }
  }
  return out;
}

namespace {

Trajectory run_packed(const ObjectiveField& J, const ControlParams& p, const DisturbanceSpec& dist,
                      const Vec& x0, double eta0, const IntegratorSpec& spec, bool transformed) {
  p.validate();
  spec.validate();
  if (x0.size() != p.n) throw std::invalid_argument("simulate: initial state dimension mismatch");
  const double dt = spec.dt > 0.0 ? spec.dt : default_step(p, spec.steps_per_fast_period);

  auto rhs = [&](double t, const Vec& y) {
    SimState s{y.head(p.n), y[p.n], t};
    return transformed ? transformed_rhs(s, J, p, dist) : closed_loop_rhs(s, J, p, dist);
  };
  Vec y0(p.n + 1);
  y0.head(p.n) = x0;
  y0[p.n] = p.filter_enabled ? eta0 : 0.0;
  const RawTrajectory raw = integrate(rhs, y0, 0.0, dt, spec.t_final, spec.record_stride);

  Trajectory traj;
  traj.params = p;
  traj.times = raw.times;
  traj.states.reserve(raw.states.size());
  traj.filter_states.reserve(raw.states.size());
  traj.outputs.reserve(raw.states.size());
  for (std::size_t i = 0; i < raw.states.size(); ++i) {
    const double t = raw.times[i];
    Vec x = raw.states[i].head(p.n);
    const Vec plant = transformed ? from_transformed(x, t, p) : x;
    traj.states.push_back(std::move(x));
    traj.filter_states.push_back(raw.states[i][p.n]);
    traj.outputs.push_back(measured_output(J, plant, dist, t));
  }
  return traj;
}

}  // namespace

Trajectory simulate_closed_loop(const ObjectiveField& J, const ControlParams& p,
                                const DisturbanceSpec& dist, const Vec& x0, double eta0,
                                const IntegratorSpec& spec) {
  return run_packed(J, p, dist, x0, eta0, spec, false);
}

Trajectory simulate_transformed(const ObjectiveField& J, const ControlParams& p,
                                const DisturbanceSpec& dist, const Vec& xt0, double eta0,
                                const IntegratorSpec& spec) {
  return run_packed(J, p, dist, xt0, eta0, spec, true);
}

Trajectory simulate_averaged(const ObjectiveField& J, const ControlParams& p,
                             const DisturbanceSpec& dist, const Vec& x0,
                             const IntegratorSpec& spec, const QuadratureSpec& quad) {
  p.validate();
  spec.validate();
  if (x0.size() != p.n) throw std::invalid_argument("simulate: initial state dimension mismatch");
  // The averaged flow is slow; the fast dither period is irrelevant here.
  const double dt =
      spec.dt > 0.0 ? spec.dt : 2.0 * M_PI / (p.omega * spec.steps_per_fast_period);
  auto rhs = [&](double t, const Vec& y) {
    return averaged_flow_rhs(y, t, J, p, quad, &dist, nullptr);
  };
  const RawTrajectory raw = integrate(rhs, x0, 0.0, dt, spec.t_final, spec.record_stride);

  Trajectory traj;
  traj.params = p;
  traj.times = raw.times;
  traj.states = raw.states;
  traj.filter_states.assign(raw.states.size(), 0.0);
  traj.outputs.reserve(raw.states.size());
  for (const Vec& x : raw.states) traj.outputs.push_back(J.evaluate(x));
  return traj;
}

}  // namespace divseek
