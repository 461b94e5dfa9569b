#include "divseek/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace divseek {

namespace {

void require_dim(int n, int min_n, const char* who) {
  if (n < min_n) throw std::invalid_argument(std::string(who) + ": dimension too small");
}

}  // namespace

ObjectiveField make_ringed_gaussian(int n) {
  require_dim(n, 1, "ringed_gaussian");
  ObjectiveField f;
  f.dimension = n;
  f.evaluate = [](const Vec& x) {
    const double r2 = x.squaredNorm();
    const double ring = r2 - 4.0;
    return 2.0 * std::exp(-r2 / 9.0) - std::exp(-0.5 * ring * ring);
  };
  f.analytic_gradient = [](const Vec& x) {
    const double r2 = x.squaredNorm();
    const double ring = r2 - 4.0;
    const double d = -4.0 / 9.0 * std::exp(-r2 / 9.0) + 2.0 * ring * std::exp(-0.5 * ring * ring);
    return Vec(d * x);
  };
  return f;
}

ObjectiveField make_ringed_gaussian_verbatim(int n) {
  require_dim(n, 1, "ringed_gaussian_verbatim");
  ObjectiveField f;
  f.dimension = n;
  f.evaluate = [](const Vec& x) {
    const double r2 = x.squaredNorm();
    return 2.0 * std::exp(-r2 / 9.0) - std::exp(-0.5 * (r2 - 4.0));
  };
  return f;
}

ObjectiveField make_perturbed_decay(int n) {
  require_dim(n, 1, "perturbed_decay");
  ObjectiveField f;
  f.dimension = n;
  f.evaluate = [](const Vec& x) {
    const double r = x.norm();
    return 1.0 / (1.0 + r * r) + 0.1 * std::sin(10.0 * r);
  };
  f.analytic_gradient = [](const Vec& x) {
    const double r = x.norm();
    if (r == 0.0) return Vec(Vec::Zero(x.size()));
    const double q = 1.0 + r * r;
    const double dr = -2.0 * r / (q * q) + std::cos(10.0 * r);
    return Vec((dr / r) * x);
  };
  return f;
}

ObjectiveField make_flat_bump(int n) {
  require_dim(n, 1, "flat_bump");
  ObjectiveField f;
  f.dimension = n;
  f.evaluate = [](const Vec& x) {
    const double r2 = x.squaredNorm();
    if (r2 < 1e-300) return 1.0;  // removable value at the origin
    return 1.0 - std::exp(-4.0 / r2);
  };
  f.analytic_gradient = [](const Vec& x) {
    const double r2 = x.squaredNorm();
    if (r2 < 1e-300) return Vec(Vec::Zero(x.size()));
    const double d = -8.0 / (r2 * r2) * std::exp(-4.0 / r2);
    return Vec(d * x);
  };
  return f;
}

ObjectiveField make_quadratic(const Mat& Q) {
  if (Q.rows() != Q.cols()) throw std::invalid_argument("quadratic: Q must be square");
  if (!Q.isApprox(Q.transpose(), 1e-12))
    throw std::invalid_argument("quadratic: Q must be symmetric");
  ObjectiveField f;
  f.dimension = static_cast<int>(Q.rows());
  f.evaluate = [Q](const Vec& x) { return x.dot(Q * x); };
  f.analytic_gradient = [Q](const Vec& x) { return Vec(2.0 * Q * x); };
  return f;
}

ObjectiveField make_linear(const Vec& w) {
  ObjectiveField f;
  f.dimension = static_cast<int>(w.size());
  f.evaluate = [w](const Vec& x) { return w.dot(x); };
  f.analytic_gradient = [w](const Vec&) { return w; };
  return f;
}

ObjectiveField make_constant(int n, double c) {
  require_dim(n, 1, "constant");
  ObjectiveField f;
  f.dimension = n;
  f.evaluate = [c](const Vec&) { return c; };
  f.analytic_gradient = [n](const Vec&) { return Vec(Vec::Zero(n)); };
  return f;
}

ObjectiveField builtin_objective(const std::string& id, const nlohmann::json& params) {
  const auto dim_or = [&](int def) { return params.contains("n") ? params.at("n").get<int>() : def; };
  if (id == "ringed_gaussian_3d") return make_ringed_gaussian(dim_or(3));
  if (id == "ringed_gaussian_3d_verbatim") return make_ringed_gaussian_verbatim(dim_or(3));
  if (id == "perturbed_decay_2d") return make_perturbed_decay(dim_or(2));
  if (id == "flat_bump_4d") return make_flat_bump(dim_or(4));
  if (id == "quadratic") {
    if (!params.contains("Q")) throw std::invalid_argument("quadratic: missing parameter Q");
    const auto rows = params.at("Q").get<std::vector<std::vector<double>>>();
    const int n = static_cast<int>(rows.size());
    Mat Q(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n)
        throw std::invalid_argument("quadratic: Q must be square");
      for (int j = 0; j < n; ++j) Q(i, j) = rows[i][j];
    }
    return make_quadratic(Q);
  }
  if (id == "linear") {
    if (!params.contains("w")) throw std::invalid_argument("linear: missing parameter w");
    const auto wv = params.at("w").get<std::vector<double>>();
    return make_linear(Eigen::Map<const Vec>(wv.data(), static_cast<long>(wv.size())));
  }
  if (id == "constant") {
    if (!params.contains("c")) throw std::invalid_argument("constant: missing parameter c");
    return make_constant(dim_or(2), params.at("c").get<double>());
  }
  throw std::invalid_argument("unknown objective id: " + id);
}

double ball_volume(int n) {
  if (n < 1) throw std::invalid_argument("ball_volume: n must be >= 1");
  return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double gradient_scale(int n) {
  if (n < 2) throw std::invalid_argument("gradient_scale: n must be >= 2");
  return ball_volume(n) / (2.0 * std::pow(M_PI, n - 1));
}

}  // namespace divseek
