#pragma once

#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "divseek/geometry.hpp"

namespace divseek {

// Black-box scalar field on R^n. The analytic gradient is optional and only
// used by tests that need an exact reference.
struct ObjectiveField {
  int dimension = 0;
  std::function<double(const Vec&)> evaluate;
  std::function<Vec(const Vec&)> analytic_gradient;  // may be empty

  double operator()(const Vec& x) const { return evaluate(x); }
};

// Radial test objective with a global maximum at the origin surrounded by a
// spherical ridge of local maxima: 2 exp(-(|x|/3)^2) - exp(-(|x|^2-4)^2/2).
// Stationary radii are near 2.03 (ring of minima) and 2.55 (ring of maxima).
ObjectiveField make_ringed_gaussian(int n = 3);

// Same objective without the square on (|x|^2-4); kept for side-by-side
// inspection. Its value at the origin is 2 - e^2 < 0.
ObjectiveField make_ringed_gaussian_verbatim(int n = 3);

// Quadratically decaying signal with sinusoidal spatial ripples:
// 1/(1+|x|^2) + sin(10|x|)/10.
ObjectiveField make_perturbed_decay(int n = 2);

// Flat-topped bump 1 - exp(-4/|x|^2), with the removable value 1 at x = 0.
ObjectiveField make_flat_bump(int n = 4);

// x^T Q x for a symmetric Q.
ObjectiveField make_quadratic(const Mat& Q);

// w . x
ObjectiveField make_linear(const Vec& w);

ObjectiveField make_constant(int n, double c);

// Factory keyed by string id, as used by config files. Recognized ids:
// ringed_gaussian_3d, ringed_gaussian_3d_verbatim, perturbed_decay_2d,
// flat_bump_4d, quadratic, linear, constant. `params` may carry
// {"n": ...} for the named objectives, {"Q": [[...]]} for quadratic,
// {"w": [...]} for linear, {"n": ..., "c": ...} for constant.
ObjectiveField builtin_objective(const std::string& id, const nlohmann::json& params = {});

// Volume of the unit ball in R^n: pi^{n/2} / Gamma(n/2 + 1).
double ball_volume(int n);

// Gradient scale constant vol(B) / (2 pi^{n-1}).
double gradient_scale(int n);

}  // namespace divseek
