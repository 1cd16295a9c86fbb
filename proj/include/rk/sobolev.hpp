#pragma once

#include <vector>

#include "rk/kernel.hpp"
#include "rk/rkhs.hpp"
#include "rk/types.hpp"

namespace rk {

/// A function on [0,1] with f(0) = 0, represented by its piecewise-constant
/// derivative: breakpoints 0 = b_0 < ... < b_m = 1 and one slope per segment.
/// All integrals over this representation are exact segment arithmetic.
///
/// Expansions over the min kernel interconvert exactly: for
/// f = sum alpha_i min(x_i, .), f'(t) = sum_{i : x_i > t} alpha_i.
class SobolevFunction {
 public:
  SobolevFunction();  // the zero function
  static SobolevFunction from_derivative(std::vector<double> breakpoints,
                                         std::vector<double> slopes);
  static SobolevFunction from_expansion(const std::vector<double>& centers, const Vector& coeffs);
  static SobolevFunction from_expansion(const RkhsFunction& f);  // min-kernel expansion

  double operator()(double x) const;

  /// (sum_k |c_k|^p Delta_k)^{1/p} for finite p >= 1; max_k |c_k| for p = inf.
  double lp_norm(double p) const;

  /// Exact min-kernel expansion with centers at the interior breakpoints.
  RkhsFunction to_expansion(KernelPtr min_kernel) const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& slopes() const { return slopes_; }

 private:
  std::vector<double> breakpoints_;  // size m + 1, first 0, last 1
  std::vector<double> slopes_;       // size m
};

/// L(f, g) = integral_0^1 f' g' dt, exact over the merged segment grid.
double duality_pairing(const SobolevFunction& f, const SobolevFunction& g);

struct HolderBound {
  double bound;  // x^{1/q} * ||f'||_p with 1/p + 1/q = 1
  bool satisfied;
};

/// |f(x)| = |integral_0^x f'| <= ||1_{[0,x]}||_q ||f'||_p.
HolderBound holder_evaluation_bound(const SobolevFunction& f, double x, double p);

/// The pair (H_1, H_inf) on [0,1]: feature families Gamma = Lambda =
/// indicator, exact kernel min(x, y), norm exponent p paired with its
/// conjugate.
struct SubdualitySpec {
  FeatureFamily gamma;
  FeatureFamily lambda;
  double p;
  KernelPtr kernel;
};

SubdualitySpec cameron_martin_subduality(double p = 1.0);

}  // namespace rk
