#pragma once

#include <vector>

#include "rk/kernel.hpp"
#include "rk/types.hpp"

namespace rk {

/// Verdict of a sample-based positivity test. A violation is a certificate of
/// non-positivity (the quadratic form is negative at the witness points with
/// the eigenvector coefficients). positive_on_sample is evidence, not a proof.
struct PositivityVerdict {
  bool positive_on_sample = false;
  double min_eigenvalue = 0.0;
  double threshold = 0.0;  // -tolerance * max(1, trace/n)
  std::vector<Vector> witness_points;
  Vector witness_coefficients;  // eigenvector of the minimum eigenvalue
};

/// Minimum Gram eigenvalue test on a point sample. The verdict is
/// positive_on_sample iff lambda_min >= -tolerance * max(1, trace/n).
/// Asymmetric kernels are rejected unless `symmetrize` is set, in which case
/// the test runs on (K + K^T)/2.
PositivityVerdict positivity_check(const Kernel& kernel, const std::vector<Vector>& points,
                                   double tolerance, bool symmetrize = false);

PositivityVerdict positivity_check(const Kernel& kernel, const std::vector<double>& points,
                                   double tolerance, bool symmetrize = false);

}  // namespace rk
