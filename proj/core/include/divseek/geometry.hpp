#pragma once

#include <Eigen/Dense>

namespace divseek {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Spherical parametrization of the unit sphere in R^n from n-1 angles:
// the first angle is the azimuth in [0,2pi), the remaining ones are polar
// angles in [0,pi]. Angles are never wrapped; the map is entire, which keeps
// derivative checks free of branch discontinuities.
Vec sphere_param(const Vec& theta);

// Analytic n x (n-1) Jacobian of sphere_param.
Mat sphere_param_jacobian(const Vec& theta);

// Square root of the Gram determinant of sphere_param:
// |sin(theta_1) sin^2(theta_2) ... sin^{n-2}(theta_{n-2})|.
// Empty product (n = 2) is 1.
double gram_sqrt(const Vec& theta);

// Angle trajectory [tau, 2^{k-1} tau, ..., 2^{(n-2)k-1} tau].
// For n = 2 there is a single angle and k has no effect.
Vec angle_path(double tau, int k, int n);

// d/dtau of angle_path: [1, 2^{k-1}, ..., 2^{(n-2)k-1}].
Vec angle_rates(int k, int n);

// Sphere-valued dither curve U(tau) = sphere_param(angle_path(tau)).
// 2pi-periodic; its image densifies on the sphere as k grows.
Vec dither_curve(double tau, int k, int n);

// Velocity dither u(tau) = dU/dtau, computed by the analytic chain rule.
Vec dither_velocity(double tau, int k, int n);

// Weighted probe dither v(tau) = gram_sqrt(angle_path(tau)) * U(tau).
// |v| <= 1 always.
Vec dither_probe(double tau, int k, int n);

// saw(sigma) = sigma - floor(sigma); maps negatives into [0,1).
double sawtooth(double sigma);

// Cube-filling curve [saw(sigma), saw(2^k sigma), ..., saw(2^{(d-1)k} sigma)].
Vec filling_curve(double sigma, int k, int d);

// Rescale a point of [0,1]^d to angle coordinates:
// first coordinate to [0,2pi], the rest to [0,pi].
Vec angle_rescale(const Vec& z);

}  // namespace divseek
