#include "rk/positivity.hpp"

#include "rk/jacobi.hpp"

namespace rk {

PositivityVerdict positivity_check(const Kernel& kernel, const std::vector<Vector>& points,
                                   double tolerance, bool symmetrize) {
  if (tolerance < 0.0) throw std::invalid_argument("positivity_check: tolerance must be >= 0");
  if (!kernel.symmetric() && !symmetrize)
    throw std::invalid_argument("positivity_check: asymmetric kernel requires symmetrize");

  Matrix g = gram(kernel, points);
  if (symmetrize) g = 0.5 * (g + g.transpose());

  const auto eig = jacobi_eigensystem(g);
  const double n = static_cast<double>(g.rows());
  const double scale = std::max(1.0, g.trace() / n);

  PositivityVerdict v;
  v.min_eigenvalue = eig.values(0);
  v.threshold = -tolerance * scale;
  v.positive_on_sample = v.min_eigenvalue >= v.threshold;
  if (!v.positive_on_sample) {
    v.witness_points = points;
    v.witness_coefficients = eig.vectors.col(0);
  }
  return v;
}

PositivityVerdict positivity_check(const Kernel& kernel, const std::vector<double>& points,
                                   double tolerance, bool symmetrize) {
  return positivity_check(kernel, scalar_points(points), tolerance, symmetrize);
}

}  // namespace rk
