#include "rk/kernel.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

namespace rk {

std::string to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::closed_form: return "closed_form";
    case KernelKind::carleman: return "carleman";
    case KernelKind::basis_sum: return "basis_sum";
    case KernelKind::duality_pair: return "duality_pair";
  }
  throw std::logic_error("unreachable kernel kind");
}

KernelKind kernel_kind_from_string(const std::string& s) {
  if (s == "closed_form") return KernelKind::closed_form;
  if (s == "carleman") return KernelKind::carleman;
  if (s == "basis_sum") return KernelKind::basis_sum;
  if (s == "duality_pair") return KernelKind::duality_pair;
  throw std::invalid_argument("unknown kernel kind: " + s);
}

Kernel::Kernel(KernelKind kind, std::string name, bool symmetric, Interval domain,
               Evaluator eval, nlohmann::json params)
    : kind_(kind),
      name_(std::move(name)),
      symmetric_(symmetric),
      domain_(domain),
      eval_(std::move(eval)),
      params_(std::move(params)) {}

double Kernel::operator()(const Vector& x, const Vector& y) const { return eval_(x, y); }

double Kernel::operator()(double x, double y) const {
  return eval_(scalar_point(x), scalar_point(y));
}

namespace {

double require_scalar(const Vector& x) {
  if (x.size() != 1) throw std::invalid_argument("kernel expects 1-d points");
  return x(0);
}

/// Quadrature pairing sum_k w_k a(u_k) b(u_k), fixed ascending-k order.
double quadrature_pairing(const FeatureFamily& a, const FeatureFamily& b, double x, double y,
                          const QuadratureMeasure& mu) {
  double acc = 0.0;
  for (std::size_t k = 0; k < mu.nodes.size(); ++k) {
    double term = mu.weights[k] * (a(x, mu.nodes[k]) * b(y, mu.nodes[k]));
    if (!std::isfinite(term))
      throw std::domain_error("feature family not finite at quadrature node u=" +
                              std::to_string(mu.nodes[k]));
    acc += term;
  }
  if (!std::isfinite(acc)) throw std::domain_error("non-finite quadrature pairing");
  return acc;
}

}  // namespace

KernelPtr carleman_kernel(const FeatureFamily& gamma, const QuadratureMeasure& mu,
                          Interval kernel_domain) {
  auto eval = [gamma, mu](const Vector& xv, const Vector& yv) {
    double x = require_scalar(xv), y = require_scalar(yv);
    return quadrature_pairing(gamma, gamma, x, y, mu);
  };
  nlohmann::json params = {{"feature_family", gamma.label},
                           {"quadrature",
                            {{"rule", mu.rule},
                             {"resolution", mu.resolution},
                             {"truncation_radius", mu.truncation_radius}}}};
  return std::make_shared<Kernel>(KernelKind::carleman, "carleman:" + gamma.label, true,
                                  kernel_domain, std::move(eval), std::move(params));
}

KernelPtr basis_kernel(std::vector<std::function<double(const Vector&)>> basis,
                       std::vector<double> weights, Interval kernel_domain, std::string name) {
  if (basis.empty()) throw std::invalid_argument("basis_kernel: empty basis");
  if (!weights.empty() && weights.size() != basis.size())
    throw std::invalid_argument("basis_kernel: weights/basis length mismatch");
  if (weights.empty()) weights.assign(basis.size(), 1.0);
  auto eval = [basis = std::move(basis), weights = std::move(weights)](const Vector& x,
                                                                       const Vector& y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      acc += weights[i] * weights[i] * (basis[i](x) * basis[i](y));
    return acc;
  };
  return std::make_shared<Kernel>(KernelKind::basis_sum, std::move(name), true, kernel_domain,
                                  std::move(eval), nlohmann::json::object());
}

KernelPtr duality_kernel(const FeatureFamily& gamma, const FeatureFamily& lambda,
                         const QuadratureMeasure& mu, Interval kernel_domain) {
  auto eval = [gamma, lambda, mu](const Vector& xv, const Vector& yv) {
    double x = require_scalar(xv), y = require_scalar(yv);
    return quadrature_pairing(gamma, lambda, x, y, mu);
  };
  nlohmann::json params = {{"gamma", gamma.label}, {"lambda", lambda.label}};
  return std::make_shared<Kernel>(KernelKind::duality_pair,
                                  "duality:" + gamma.label + "/" + lambda.label, false,
                                  kernel_domain, std::move(eval), std::move(params));
}

KernelPtr closed_form_kernel(const std::string& name) {
  return closed_form_kernel(name, nlohmann::json::object());
}

KernelPtr closed_form_kernel(const std::string& name, const nlohmann::json& params) {
  if (name == "min") {
    auto eval = [](const Vector& x, const Vector& y) {
      return std::min(require_scalar(x), require_scalar(y));
    };
    return std::make_shared<Kernel>(KernelKind::closed_form, "min", true, Interval{0.0, kInf},
                                    eval, params);
  }
  if (name == "gaussian") {
    double sigma = params.value("sigma", std::numbers::sqrt2);
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian kernel: sigma must be > 0");
    auto eval = [sigma](const Vector& x, const Vector& y) {
      return std::exp(-(x - y).squaredNorm() / (2.0 * sigma * sigma));
    };
    return std::make_shared<Kernel>(KernelKind::closed_form, "gaussian", true,
                                    Interval::real_line(), eval,
                                    nlohmann::json{{"sigma", sigma}});
  }
  if (name == "linear_plus_one") {
    auto eval = [](const Vector& x, const Vector& y) { return x.dot(y) + 1.0; };
    return std::make_shared<Kernel>(KernelKind::closed_form, "linear_plus_one", true,
                                    Interval::real_line(), eval, params);
  }
  if (name == "tanh") {
    double a = params.value("a", 1.0);
    double b = params.value("b", 0.0);
    auto eval = [a, b](const Vector& x, const Vector& y) { return std::tanh(a * x.dot(y) + b); };
    return std::make_shared<Kernel>(KernelKind::closed_form, "tanh", true, Interval::real_line(),
                                    eval, nlohmann::json{{"a", a}, {"b", b}});
  }
  if (name == "indicator_equal") {
    auto eval = [](const Vector& x, const Vector& y) {
      return x.size() == y.size() && (x.array() == y.array()).all() ? 1.0 : 0.0;
    };
    return std::make_shared<Kernel>(KernelKind::closed_form, "indicator_equal", true,
                                    Interval::real_line(), eval, params);
  }
  throw std::invalid_argument("unknown closed-form kernel: " + name);
}

namespace {

void check_in_domain(const Kernel& k, const Vector& p) {
  if (p.size() == 1 && !k.domain().contains(p(0)))
    throw std::domain_error("point outside kernel domain: " + std::to_string(p(0)));
}

}  // namespace

Matrix gram(const Kernel& k, const std::vector<Vector>& points) {
  if (points.empty()) throw std::invalid_argument("gram: need at least one point");
  for (const auto& p : points) check_in_domain(k, p);
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = k(points[i], points[j]);
  return g;
}

Matrix gram(const Kernel& k, const std::vector<double>& points) {
  return gram(k, scalar_points(points));
}

FeatureFamily named_feature_family(const std::string& name) {
  if (name == "cameron_martin") {
    return {"cameron_martin", Interval::unit(),
            [](double x, double u) { return u <= x ? 1.0 : 0.0; }};
  }
  if (name == "gaussian") {
    const double z = std::pow(std::numbers::pi, -0.25);
    return {"gaussian", Interval::real_line(),
            [z](double x, double u) { return z * std::exp(-0.5 * (x - u) * (x - u)); }};
  }
  throw std::invalid_argument("unknown feature family: " + name);
}

std::vector<std::function<double(const Vector&)>> named_basis(const std::string& name, int order) {
  if (order < 1) throw std::invalid_argument("basis order must be >= 1");
  std::vector<std::function<double(const Vector&)>> basis;
  if (name == "affine") {
    // {1, x_1, ..., x_d} so the kernel is x.y + 1; order is the dimension d.
    basis.emplace_back([](const Vector&) { return 1.0; });
    for (int i = 0; i < order; ++i)
      basis.emplace_back([i](const Vector& x) { return x(i); });
    return basis;
  }
  if (name == "trigonometric") {
    // Orthonormal on L^2[0,1]: 1, sqrt2 cos(2 pi k u), sqrt2 sin(2 pi k u).
    basis.emplace_back([](const Vector&) { return 1.0; });
    for (int k = 1; static_cast<int>(basis.size()) < order; ++k) {
      basis.emplace_back([k](const Vector& x) {
        return std::numbers::sqrt2 * std::cos(2.0 * std::numbers::pi * k * x(0));
      });
      if (static_cast<int>(basis.size()) < order)
        basis.emplace_back([k](const Vector& x) {
          return std::numbers::sqrt2 * std::sin(2.0 * std::numbers::pi * k * x(0));
        });
    }
    return basis;
  }
  if (name == "legendre") {
    // Shifted Legendre on [0,1], normalized: sqrt(2n+1) P_n(2u - 1).
    for (int n = 0; n < order; ++n) {
      basis.emplace_back([n](const Vector& x) {
        double t = 2.0 * x(0) - 1.0;
        double p0 = 1.0, p1 = t;
        if (n == 0) return 1.0;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        return std::sqrt(2.0 * n + 1.0) * p1;
      });
    }
    return basis;
  }
  throw std::invalid_argument("unknown basis: " + name);
}

KernelPtr named_basis_kernel(const std::string& basis_name, int order,
                             std::vector<double> weights) {
  auto basis = named_basis(basis_name, order);
  Interval domain = basis_name == "affine" ? Interval::real_line() : Interval::unit();
  nlohmann::json params = {{"basis", basis_name}, {"order", order}};
  if (!weights.empty()) params["weights"] = weights;
  auto kernel = basis_kernel(std::move(basis), std::move(weights), domain,
                             "basis:" + basis_name);
  // basis_kernel has no recipe knowledge; rebuild with the recorded params.
  return std::make_shared<Kernel>(
      KernelKind::basis_sum, kernel->name(), true, domain,
      [kernel](const Vector& x, const Vector& y) { return (*kernel)(x, y); },
      std::move(params));
}

}  // namespace rk
