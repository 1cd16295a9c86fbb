#include "rk/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace rk {

void gauss_legendre_reference(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  // Newton iteration on P_n, symmetric roots computed once.
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // Recompute P'_n at the converged root for the weight.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

namespace {

void append_scaled_gl(std::vector<double>& nodes, std::vector<double>& weights,
                      const std::vector<double>& ref_nodes, const std::vector<double>& ref_weights,
                      double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < ref_nodes.size(); ++i) {
    nodes.push_back(mid + half * ref_nodes[i]);
    weights.push_back(half * ref_weights[i]);
  }
}

}  // namespace

QuadratureMeasure build_quadrature(const Interval& domain, const std::string& rule,
                                   int resolution, double truncation_radius) {
  if (resolution < 2) throw std::invalid_argument("quadrature resolution must be >= 2");

  Interval box = domain;
  double applied_radius = 0.0;
  if (!domain.bounded()) {
    if (truncation_radius <= 0.0)
      throw std::invalid_argument("unbounded domain requires a positive truncation radius");
    double center = 0.0;
    if (std::isfinite(domain.lo)) center = domain.lo + truncation_radius;
    if (std::isfinite(domain.hi)) center = domain.hi - truncation_radius;
    box = {center - truncation_radius, center + truncation_radius};
    applied_radius = truncation_radius;
  }

  QuadratureMeasure mu;
  mu.domain = box;
  mu.rule = rule;
  mu.resolution = resolution;
  mu.truncation_radius = applied_radius;

  if (rule == "gauss_legendre") {
    std::vector<double> rn, rw;
    gauss_legendre_reference(resolution, rn, rw);
    append_scaled_gl(mu.nodes, mu.weights, rn, rw, box.lo, box.hi);
  } else if (rule == "gauss_legendre_composite") {
    constexpr int kNodesPerPanel = 8;
    std::vector<double> rn, rw;
    gauss_legendre_reference(kNodesPerPanel, rn, rw);
    const double h = box.length() / resolution;
    for (int p = 0; p < resolution; ++p)
      append_scaled_gl(mu.nodes, mu.weights, rn, rw, box.lo + p * h, box.lo + (p + 1) * h);
  } else if (rule == "trapezoid") {
    const double h = box.length() / (resolution - 1);
    for (int i = 0; i < resolution; ++i) {
      mu.nodes.push_back(box.lo + i * h);
      mu.weights.push_back((i == 0 || i == resolution - 1) ? 0.5 * h : h);
    }
  } else {
    throw std::invalid_argument("unknown quadrature rule: " + rule);
  }

  return mu;
}

}  // namespace rk
