#include "divseek/averaging.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>

#include "divseek/rng.hpp"

namespace divseek {

void QuadratureSpec::validate() const {
  if (angular_nodes < 2) throw std::invalid_argument("quadrature: angular_nodes must be >= 2");
  if (radial_nodes < 2) throw std::invalid_argument("quadrature: radial_nodes must be >= 2");
  if (curve_nodes != 0 && curve_nodes < 2)
    throw std::invalid_argument("quadrature: curve_nodes must be >= 2 (or 0 for auto)");
  if (monte_carlo_samples < 2)
    throw std::invalid_argument("quadrature: monte_carlo_samples must be >= 2");
}

GaussRule gauss_legendre(int m) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    // Chebyshev initial guess, then Newton on P_m.
    double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= m; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.nodes[i] = -x;
    rule.nodes[m - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  return rule;
}

long min_curve_nodes(int n, int k) {
  if (n < 2 || k < 1) throw std::invalid_argument("min_curve_nodes: n >= 2, k >= 1 required");
  if (n == 2) return 256;
  const double needed = 256.0 * std::ldexp(1.0, (n - 2) * k);
  if (needed > 1e9) throw std::invalid_argument("min_curve_nodes: node budget exceeded");
  return static_cast<long>(needed);
}

namespace {

// Tensor rule for the angle domain (0,2pi) x (0,pi)^{n-2}: columns of `dirs`
// are unit vectors, `weight` already carries the Gram factor. Sums of
// weight * f(dir) approximate surface integrals over the unit sphere.
struct AngularRule {
  Mat dirs;
  Vec weight;
};

std::shared_ptr<const AngularRule> angular_rule(int n, int nodes) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const AngularRule>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({n, nodes}); it != cache.end()) return it->second;
  }

  // Azimuth: equispaced midpoints on (0,2pi), spectrally accurate for the
  // periodic direction. Polar angles: Gauss-Legendre mapped to (0,pi).
  const GaussRule gl = gauss_legendre(nodes);
  const long total = static_cast<long>(std::pow(static_cast<double>(nodes), n - 1));
  auto rule = std::make_shared<AngularRule>();
  rule->dirs.resize(n, total);
  rule->weight.resize(total);

  std::vector<int> idx(n - 1, 0);
  Vec theta(n - 1);
  for (long c = 0; c < total; ++c) {
    theta[0] = 2.0 * M_PI * (idx[0] + 0.5) / nodes;
    double w = 2.0 * M_PI / nodes;
    for (int j = 1; j <= n - 2; ++j) {
      theta[j] = 0.5 * M_PI * (gl.nodes[idx[j]] + 1.0);
      w *= 0.5 * M_PI * gl.weights[idx[j]];
    }
    rule->dirs.col(c) = sphere_param(theta);
    rule->weight[c] = w * gram_sqrt(theta);
    for (int j = 0; j < n - 1; ++j) {
      if (++idx[j] < nodes) break;
      idx[j] = 0;
    }
  }

  std::lock_guard lock(mu);
  return cache.try_emplace({n, nodes}, rule).first->second;
}

void require_radius(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("averaging: radius a must be positive");
}

void require_match(const ObjectiveField& J, const Vec& x) {
  if (J.dimension != x.size())
    throw std::invalid_argument("averaging: point dimension does not match objective");
}

std::uint64_t call_seed(const QuadratureSpec& quad, const Vec& x, double a, std::uint64_t tag) {
  std::uint64_t h = hash_combine(quad.seed, tag);
  h = hash_combine(h, a);
  for (long i = 0; i < x.size(); ++i) h = hash_combine(h, x[i]);
  return h;
}

double mc_averaged_objective(const ObjectiveField& J, const Vec& x, double a,
                             const QuadratureSpec& quad) {
  const int n = static_cast<int>(x.size());
  std::mt19937_64 gen(call_seed(quad, x, a, 0xba11));
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  double sum = 0.0;
  Vec xi(n);
  for (long s = 0; s < quad.monte_carlo_samples; ++s) {
    do {
      for (int i = 0; i < n; ++i) xi[i] = unif(gen);
    } while (xi.squaredNorm() > 1.0);
    sum += J.evaluate(x + a * xi);
  }
  return sum / static_cast<double>(quad.monte_carlo_samples);
}

Vec mc_averaged_gradient(const ObjectiveField& J, const Vec& x, double a,
                         const QuadratureSpec& quad) {
  const int n = static_cast<int>(x.size());
  std::mt19937_64 gen(call_seed(quad, x, a, 0x5fe2e));
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec acc = Vec::Zero(n), s(n);
  for (long i = 0; i < quad.monte_carlo_samples; ++i) {
    for (int j = 0; j < n; ++j) s[j] = normal(gen);
    s.normalize();
    acc += J.evaluate(x + a * s) * s;
  }
  // surface area of the unit sphere is n * vol(B)
  return (n / a) * acc / static_cast<double>(quad.monte_carlo_samples);
}

}  // namespace

double averaged_objective(const ObjectiveField& J, const Vec& x, double a,
                          const QuadratureSpec& quad) {
  quad.validate();
  require_radius(a);
  require_match(J, x);
  if (quad.mode == QuadratureSpec::Mode::monte_carlo) return mc_averaged_objective(J, x, a, quad);

  const int n = static_cast<int>(x.size());
  const auto rule = angular_rule(n, quad.angular_nodes);
  const GaussRule radial = gauss_legendre(quad.radial_nodes);
  double sum = 0.0;
  for (int q = 0; q < quad.radial_nodes; ++q) {
    const double r = 0.5 * (radial.nodes[q] + 1.0);
    const double wr = 0.5 * radial.weights[q] * std::pow(r, n - 1);
    double shell = 0.0;
    for (long c = 0; c < rule->weight.size(); ++c)
      shell += rule->weight[c] * J.evaluate(x + (a * r) * rule->dirs.col(c));
    sum += wr * shell;
  }
  return sum / ball_volume(n);
}

Vec averaged_gradient(const ObjectiveField& J, const Vec& x, double a,
                      const QuadratureSpec& quad) {
  quad.validate();
  require_radius(a);
  require_match(J, x);
  if (quad.mode == QuadratureSpec::Mode::monte_carlo) return mc_averaged_gradient(J, x, a, quad);

  const int n = static_cast<int>(x.size());
  const auto rule = angular_rule(n, quad.angular_nodes);
  Vec acc = Vec::Zero(n);
  for (long c = 0; c < rule->weight.size(); ++c)
    acc += (rule->weight[c] * J.evaluate(x + a * rule->dirs.col(c))) * rule->dirs.col(c);
  return acc / (a * ball_volume(n));
}

Vec dither_field(const ObjectiveField& J, const Vec& xt, double a, double b, int k,
                 const QuadratureSpec& quad) {
  quad.validate();
  require_radius(a);
  require_match(J, xt);
  const int n = static_cast<int>(xt.size());
  const long needed = min_curve_nodes(n, k);
  const long nodes = quad.curve_nodes == 0 ? needed : quad.curve_nodes;
  if (nodes < needed)
    throw std::runtime_error("dither_field: curve_nodes " + std::to_string(nodes) +
                             " insufficient for k=" + std::to_string(k) + ", need " +
                             std::to_string(needed));
  Vec acc = Vec::Zero(n);
  for (long i = 0; i < nodes; ++i) {
    const double tau = 2.0 * M_PI * (i + 0.5) / static_cast<double>(nodes);
    const Vec v = dither_probe(tau, k, n);
    acc += J.evaluate(xt + a * dither_curve(tau, k, n)) * v;
  }
  return (b / static_cast<double>(nodes)) * acc;
}

Vec filter_field(double eta, double b, int k, int n, const QuadratureSpec& quad) {
  quad.validate();
  const long needed = min_curve_nodes(n, k);
  const long nodes = quad.curve_nodes == 0 ? needed : quad.curve_nodes;
  if (nodes < needed)
    throw std::runtime_error("filter_field: curve_nodes insufficient for k=" + std::to_string(k));
  Vec acc = Vec::Zero(n);
  for (long i = 0; i < nodes; ++i) {
    const double tau = 2.0 * M_PI * (i + 0.5) / static_cast<double>(nodes);
    acc += dither_probe(tau, k, n);
  }
  return (-b * eta / static_cast<double>(nodes)) * acc;
}

Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_gradient: step must be positive");
  Vec grad(x.size());
  Vec p = x;
  for (long i = 0; i < x.size(); ++i) {
    p[i] = x[i] + h;
    const double fp = f(p);
    p[i] = x[i] - h;
    const double fm = f(p);
    p[i] = x[i];
    grad[i] = (fp - fm) / (2.0 * h);
  }
  return grad;
}

}  // namespace divseek
