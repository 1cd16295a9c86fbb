#include "rk/rkhs.hpp"

#include <cmath>

namespace rk {

RkhsFunction RkhsFunction::make(KernelPtr k, std::vector<Vector> centers, Vector coeffs) {
  if (!k) throw std::invalid_argument("RkhsFunction: null kernel");
  if (static_cast<Eigen::Index>(centers.size()) != coeffs.size())
    throw std::invalid_argument("RkhsFunction: centers/coefficients length mismatch");
  for (const auto& c : centers)
    if (c.size() == 1 && !k->domain().contains(c(0)))
      throw std::domain_error("RkhsFunction: center outside kernel domain");
  return {std::move(k), std::move(centers), std::move(coeffs)};
}

RkhsFunction RkhsFunction::make(KernelPtr k, const std::vector<double>& centers, Vector coeffs) {
  return make(std::move(k), scalar_points(centers), std::move(coeffs));
}

double evaluate(const RkhsFunction& f, const Vector& x) {
  if (x.size() == 1 && !f.kernel->domain().contains(x(0)))
    throw std::domain_error("evaluate: point outside kernel domain");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.centers.size(); ++i)
    acc += f.coefficients(static_cast<Eigen::Index>(i)) * (*f.kernel)(x, f.centers[i]);
  return acc;
}

double evaluate(const RkhsFunction& f, double x) { return evaluate(f, scalar_point(x)); }

double inner_product(const RkhsFunction& f, const RkhsFunction& g) {
  if (f.kernel != g.kernel)
    throw std::invalid_argument("inner_product: functions built on different kernels");
  if (!f.kernel->symmetric())
    throw std::invalid_argument("inner_product: kernel kind carries no inner product");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.centers.size(); ++i)
    for (std::size_t j = 0; j < g.centers.size(); ++j)
      acc += f.coefficients(static_cast<Eigen::Index>(i)) *
             g.coefficients(static_cast<Eigen::Index>(j)) *
             (*f.kernel)(f.centers[i], g.centers[j]);
  return acc;
}

double squared_norm(const RkhsFunction& f) { return inner_product(f, f); }

double norm(const RkhsFunction& f) { return std::sqrt(std::max(0.0, squared_norm(f))); }

double reproducing_residual(const RkhsFunction& f, const Vector& x) {
  RkhsFunction section{f.kernel, {x}, Vector::Ones(1)};
  return std::abs(inner_product(section, f) - evaluate(f, x));
}

double reproducing_residual(const RkhsFunction& f, double x) {
  return reproducing_residual(f, scalar_point(x));
}

EvaluationBound evaluation_bound(const Kernel& kernel, const Vector& x) {
  const double kxx = kernel(x, x);
  if (kxx < 0.0)
    throw std::domain_error("evaluation_bound: K(x,x) < 0, bound undefined for this kernel");
  return {x, std::sqrt(kxx)};
}

EvaluationBound evaluation_bound(const Kernel& kernel, double x) {
  return evaluation_bound(kernel, scalar_point(x));
}

}  // namespace rk
