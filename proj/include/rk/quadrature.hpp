#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rk/types.hpp"

namespace rk {

/// Discrete approximation of a measure on an interval: nodes, nonnegative
/// weights, and the rule that produced them. Nodes are strictly increasing.
struct QuadratureMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;
  Interval domain;                 // the (possibly truncated) integration interval
  std::string rule;
  int resolution = 0;
  double truncation_radius = 0.0;  // 0 when the domain was already bounded

  double integrate(const std::function<double(double)>& f) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) acc += weights[k] * f(nodes[k]);
    return acc;
  }

  double total_mass() const {
    double acc = 0.0;
    for (double w : weights) acc += w;
    return acc;
  }
};

/// Builds a quadrature rule on `domain`. Supported rules:
///   "gauss_legendre"            resolution = node count
///   "gauss_legendre_composite"  resolution = panel count (8-node rule per panel)
///   "trapezoid"                 resolution = node count (>= 2)
/// An unbounded domain requires truncation_radius > 0; the rule is then built
/// on [c - R, c + R] where c is the finite part of the domain (0 for the whole
/// line).
QuadratureMeasure build_quadrature(const Interval& domain, const std::string& rule,
                                   int resolution, double truncation_radius = 0.0);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre_reference(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace rk
