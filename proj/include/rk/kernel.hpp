#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rk/quadrature.hpp"
#include "rk/types.hpp"

namespace rk {

enum class KernelKind { closed_form, carleman, basis_sum, duality_pair };

std::string to_string(KernelKind kind);
KernelKind kernel_kind_from_string(const std::string& s);

/// A two-variable real function on X x X together with the recipe that built
/// it. Evaluation is deterministic; kernels built from a Carleman family or a
/// basis sum are exactly symmetric (fixed summation order, commutative
/// products). Duality-pair kernels carry no symmetry guarantee.
class Kernel {
 public:
  using Evaluator = std::function<double(const Vector&, const Vector&)>;

  Kernel(KernelKind kind, std::string name, bool symmetric, Interval domain,
         Evaluator eval, nlohmann::json params);

  double operator()(const Vector& x, const Vector& y) const;
  double operator()(double x, double y) const;

  KernelKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool symmetric() const { return symmetric_; }
  const Interval& domain() const { return domain_; }
  const nlohmann::json& params() const { return params_; }

 private:
  KernelKind kind_;
  std::string name_;
  bool symmetric_;
  Interval domain_;
  Evaluator eval_;
  nlohmann::json params_;
};

using KernelPtr = std::shared_ptr<const Kernel>;

/// A family x -> Gamma_x of functions on an integration domain G, the input
/// to the Carleman and duality-pair constructions.
struct FeatureFamily {
  std::string label;
  Interval domain = Interval::unit();  // G
  std::function<double(double x, double u)> value;

  double operator()(double x, double u) const { return value(x, u); }
};

/// K(x, y) = sum_k w_k Gamma_x(u_k) Gamma_y(u_k). Exactly symmetric.
KernelPtr carleman_kernel(const FeatureFamily& gamma, const QuadratureMeasure& mu,
                          Interval kernel_domain = Interval::real_line());

/// K(x, y) = sum_i a_i^2 e_i(x) e_i(y); a_i = 1 when weights are absent.
/// Positive by construction.
KernelPtr basis_kernel(std::vector<std::function<double(const Vector&)>> basis,
                       std::vector<double> weights = {},
                       Interval kernel_domain = Interval::real_line(),
                       std::string name = "basis_sum");

/// K(x, y) = sum_k w_k Gamma_x(u_k) Lambda_y(u_k). No symmetry assumed.
KernelPtr duality_kernel(const FeatureFamily& gamma, const FeatureFamily& lambda,
                         const QuadratureMeasure& mu,
                         Interval kernel_domain = Interval::real_line());

/// Closed-form kernels: "min", "gaussian" (param sigma), "linear_plus_one",
/// "tanh" (params a, b), "indicator_equal".
KernelPtr closed_form_kernel(const std::string& name, const nlohmann::json& params);
KernelPtr closed_form_kernel(const std::string& name);

Matrix gram(const Kernel& k, const std::vector<Vector>& points);
Matrix gram(const Kernel& k, const std::vector<double>& points);

/// Named feature families used by serialization and the verification suite.
///   "cameron_martin"      Gamma_x(u) = 1_{u <= x} on [0,1]
///   "gaussian"            Gamma_x(u) = pi^{-1/4} exp(-(x-u)^2/2) on R
FeatureFamily named_feature_family(const std::string& name);

/// Named finite bases for basis_kernel, as pointwise functions of a vector x.
///   "affine"         {1, x_1, ..., x_d}         (param: dimension)
///   "trigonometric"  {1, sqrt2 cos(2 pi k u), sqrt2 sin(2 pi k u)} on [0,1]
///   "legendre"       shifted normalized Legendre polynomials on [0,1]
std::vector<std::function<double(const Vector&)>> named_basis(const std::string& name, int order);

/// basis_kernel over a named basis, with the recipe recorded in params so the
/// kernel can be serialized and rebuilt.
KernelPtr named_basis_kernel(const std::string& basis_name, int order,
                             std::vector<double> weights = {});

}  // namespace rk
