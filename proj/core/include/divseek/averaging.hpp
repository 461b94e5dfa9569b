#pragma once

#include <cstdint>
#include <vector>

#include "divseek/objective.hpp"

namespace divseek {

// Node counts and mode for the ball / sphere / dither-period integrals.
// tensor_gauss is the deterministic default (spectrally accurate for smooth
// objectives); monte_carlo exists as an independent oracle.
struct QuadratureSpec {
  enum class Mode { tensor_gauss, monte_carlo };

  int angular_nodes = 64;  // per angle dimension
  int radial_nodes = 32;
  // Nodes for the 1-D dither-period integrals; 0 means "auto", i.e.
  // min_curve_nodes(n, k). A nonzero value below that minimum is an error,
  // never a silent degradation.
  long curve_nodes = 0;
  Mode mode = Mode::tensor_gauss;
  std::uint64_t seed = 0;
  long monte_carlo_samples = 200000;

  void validate() const;
};

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int m);

// Required 1-D node count for resolving the fastest dither angle at (n, k):
// 256 * 2^{(n-2)k}, i.e. at least 512 samples per period of the fastest
// angular component.
long min_curve_nodes(int n, int k);

// Ball average (1/vol B) \int_B J(x + a xi) dxi.
double averaged_objective(const ObjectiveField& J, const Vec& x, double a,
                          const QuadratureSpec& quad = {});

// Gradient of the ball average, evaluated as a surface integral over the
// sphere of radius a (divergence-theorem route, independent of any
// differentiation of averaged_objective).
Vec averaged_gradient(const ObjectiveField& J, const Vec& x, double a,
                      const QuadratureSpec& quad = {});

// One-period average of the dither-weighted objective along the sphere curve:
// (b/2pi) \int_0^{2pi} J(xt + a U(tau)) g(tau) U(tau) dtau.
// Converges to a*b*c*grad averaged_objective as k grows.
Vec dither_field(const ObjectiveField& J, const Vec& xt, double a, double b, int k,
                 const QuadratureSpec& quad = {});

// One-period average of the filter coupling term:
// -(b/2pi) eta \int_0^{2pi} g(tau) U(tau) dtau. Vanishes as k grows.
Vec filter_field(double eta, double b, int k, int n, const QuadratureSpec& quad = {});

// Central finite differences, the oracle used by the gradient-identity checks.
Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x, double h);

}  // namespace divseek
