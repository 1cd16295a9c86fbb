#pragma once

#include <string>
#include <vector>

#include "rk/kernel.hpp"
#include "rk/rkhs.hpp"
#include "rk/sobolev.hpp"
#include "rk/types.hpp"

namespace rk {

struct Dataset {
  Matrix xs;  // n x d
  Vector ys;  // n

  Eigen::Index size() const { return ys.size(); }
  std::vector<Vector> points() const;
  static Dataset from_scalar(const std::vector<double>& xs, const std::vector<double>& ys);
};

struct FitConfig {
  double lambda = 1e-3;           // regularization weight; 0 allowed only for KRR interpolation
  double p = 2.0;                 // norm exponent, p-norm solver only
  int max_iterations = 50000;
  double gradient_tolerance = 1e-8;
  unsigned seed = 0;
};

struct FitDiagnostics {
  int iterations = 0;
  double gradient_norm = 0.0;
  Vector residuals;
  bool converged = true;
};

struct FitResult {
  RkhsFunction model;
  double objective = 0.0;
  FitDiagnostics diagnostics;
  std::string solver;  // "krr" or "pnorm"
  double lambda = 0.0;
  double p = 0.0;
};

/// Kernel ridge regression: minimizes (1/n) sum (f(x_i) - y_i)^2 +
/// lambda ||f||_H^2 over the representer subspace. Coefficients solve
/// (G + n lambda I) alpha = y by Cholesky factorization. lambda = 0 is
/// interpolation and requires a full-rank Gram (error otherwise).
FitResult fit_krr(KernelPtr kernel, const Dataset& data, const FitConfig& config);

/// Non-Hilbertian fit over the Cameron-Martin pair: minimizes
/// J(alpha) = sum (f(x_i) - y_i)^2 + lambda integral |f'|^p over
/// f = sum alpha_i min(x_i, .), with the derivative handled as exact
/// piecewise-constant segments. Requires p >= 1 and xs in (0, 1].
FitResult fit_pnorm(const Dataset& data, const FitConfig& config);

double krr_objective(const RkhsFunction& model, const Dataset& data, double lambda);
double pnorm_objective(const RkhsFunction& model, const Dataset& data, double lambda, double p);

/// Samples random perturbation directions inside the representer span and
/// outside it (directions vanishing at every data point) and returns the
/// largest objective decrease found. Near zero certifies the fit.
double representer_optimality_probe(const FitResult& result, const Dataset& data, int trials,
                                    unsigned seed);

}  // namespace rk
