#include "divseek/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace divseek {

namespace {

void require_dim(const Vec& theta) {
  if (theta.size() < 1)
    throw std::invalid_argument("sphere parametrization needs n >= 2 (at least one angle)");
}

// Component i of the parametrization is a product of one factor per angle m:
//   i == 0    : cos(theta_0) * prod_{m>=1} sin(theta_m)
//   i == 1    : sin(theta_0) * prod_{m>=1} sin(theta_m)
//   i >= 2    : cos(theta_{i-1}) * prod_{m>=i} sin(theta_m)
// factor(i, m) returns that factor; dfactor its derivative in theta_m.
double factor(int i, int m, const Vec& theta) {
  if (i == 0) return m == 0 ? std::cos(theta[0]) : std::sin(theta[m]);
  if (i == 1) return m == 0 ? std::sin(theta[0]) : std::sin(theta[m]);
  if (m < i - 1) return 1.0;
  if (m == i - 1) return std::cos(theta[m]);
  return std::sin(theta[m]);
}

double dfactor(int i, int m, const Vec& theta) {
  if (i == 0) return m == 0 ? -std::sin(theta[0]) : std::cos(theta[m]);
  if (i == 1) return m == 0 ? std::cos(theta[0]) : std::cos(theta[m]);
  if (m < i - 1) return 0.0;
  if (m == i - 1) return -std::sin(theta[m]);
  return std::cos(theta[m]);
}

}  // namespace

Vec sphere_param(const Vec& theta) {
  require_dim(theta);
  const int n = static_cast<int>(theta.size()) + 1;
  Vec phi(n);
  for (int i = 0; i < n; ++i) {
    double p = 1.0;
    for (int m = 0; m < n - 1; ++m) p *= factor(i, m, theta);
    phi[i] = p;
  }
  return phi;
}

Mat sphere_param_jacobian(const Vec& theta) {
  require_dim(theta);
  const int n = static_cast<int>(theta.size()) + 1;
  Mat jac(n, n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n - 1; ++j) {
      double p = 1.0;
      for (int m = 0; m < n - 1; ++m)
        p *= (m == j) ? dfactor(i, m, theta) : factor(i, m, theta);
      jac(i, j) = p;
    }
  }
  return jac;
}

double gram_sqrt(const Vec& theta) {
  require_dim(theta);
  const int n = static_cast<int>(theta.size()) + 1;
  double g = 1.0;
  for (int j = 1; j <= n - 2; ++j) g *= std::pow(std::sin(theta[j]), j);
  return std::abs(g);
}

Vec angle_rates(int k, int n) {
  if (k < 1) throw std::invalid_argument("angle_rates: k must be >= 1");
  if (n < 2) throw std::invalid_argument("angle_rates: n must be >= 2");
  Vec rates(n - 1);
  rates[0] = 1.0;
  for (int j = 1; j <= n - 2; ++j) rates[j] = std::ldexp(1.0, j * k - 1);
  return rates;
}

Vec angle_path(double tau, int k, int n) { return tau * angle_rates(k, n); }

Vec dither_curve(double tau, int k, int n) { return sphere_param(angle_path(tau, k, n)); }

Vec dither_velocity(double tau, int k, int n) {
  const Vec theta = angle_path(tau, k, n);
  return sphere_param_jacobian(theta) * angle_rates(k, n);
}

Vec dither_probe(double tau, int k, int n) {
  const Vec theta = angle_path(tau, k, n);
  return gram_sqrt(theta) * sphere_param(theta);
}

double sawtooth(double sigma) { return sigma - std::floor(sigma); }

Vec filling_curve(double sigma, int k, int d) {
  if (d < 1) throw std::invalid_argument("filling_curve: d must be >= 1");
  if (k < 1) throw std::invalid_argument("filling_curve: k must be >= 1");
  Vec z(d);
  for (int j = 0; j < d; ++j) z[j] = sawtooth(std::ldexp(sigma, j * k));
  return z;
}

Vec angle_rescale(const Vec& z) {
  const int d = static_cast<int>(z.size());
  if (d < 1) throw std::invalid_argument("angle_rescale: empty cube point");
  Vec theta(d);
  for (int j = 0; j < d; ++j) {
    if (z[j] < 0.0 || z[j] > 1.0)
      throw std::invalid_argument("angle_rescale: coordinate outside [0,1]");
    theta[j] = (j == 0 ? 2.0 : 1.0) * M_PI * z[j];
  }
  return theta;
}

}  // namespace divseek
