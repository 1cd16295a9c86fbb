#pragma once

#include <vector>

#include "rk/kernel.hpp"
#include "rk/types.hpp"

namespace rk {

/// A finite kernel expansion f = sum_i alpha_i K(., x_i). Duplicate centers
/// are allowed; coefficients are never merged.
struct RkhsFunction {
  KernelPtr kernel;
  std::vector<Vector> centers;
  Vector coefficients;

  static RkhsFunction make(KernelPtr k, std::vector<Vector> centers, Vector coeffs);
  static RkhsFunction make(KernelPtr k, const std::vector<double>& centers, Vector coeffs);
};

/// f(x) = sum_i alpha_i K(x, x_i), fixed summation order.
double evaluate(const RkhsFunction& f, const Vector& x);
double evaluate(const RkhsFunction& f, double x);

/// <f, g>_H = sum_i sum_j alpha_i beta_j K(x_i, x_j). Requires the same
/// kernel object and a symmetric kernel kind.
double inner_product(const RkhsFunction& f, const RkhsFunction& g);

/// alpha^T G alpha, computed directly (never via inversion).
double squared_norm(const RkhsFunction& f);
double norm(const RkhsFunction& f);

/// |<K(., x), f>_H - f(x)|.
double reproducing_residual(const RkhsFunction& f, const Vector& x);
double reproducing_residual(const RkhsFunction& f, double x);

/// The continuity constant of evaluation at x: M_x = sqrt(K(x, x)).
struct EvaluationBound {
  Vector x;
  double bound;  // M_x
};

EvaluationBound evaluation_bound(const Kernel& kernel, const Vector& x);
EvaluationBound evaluation_bound(const Kernel& kernel, double x);

}  // namespace rk
