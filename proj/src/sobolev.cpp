#include "rk/sobolev.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace rk {

SobolevFunction::SobolevFunction() : breakpoints_{0.0, 1.0}, slopes_{0.0} {}

SobolevFunction SobolevFunction::from_derivative(std::vector<double> breakpoints,
                                                 std::vector<double> slopes) {
  if (breakpoints.size() < 2 || breakpoints.front() != 0.0 || breakpoints.back() != 1.0)
    throw std::invalid_argument("SobolevFunction: breakpoints must run from 0 to 1");
  if (slopes.size() + 1 != breakpoints.size())
    throw std::invalid_argument("SobolevFunction: need one slope per segment");
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k)
    if (!(breakpoints[k] < breakpoints[k + 1]))
      throw std::invalid_argument("SobolevFunction: breakpoints must be strictly increasing");
  SobolevFunction f;
  f.breakpoints_ = std::move(breakpoints);
  f.slopes_ = std::move(slopes);
  return f;
}

SobolevFunction SobolevFunction::from_expansion(const std::vector<double>& centers,
                                                const Vector& coeffs) {
  if (static_cast<Eigen::Index>(centers.size()) != coeffs.size())
    throw std::invalid_argument("from_expansion: centers/coefficients length mismatch");
  for (double c : centers)
    if (!(c > 0.0 && c <= 1.0))
      throw std::invalid_argument("from_expansion: centers must lie in (0, 1]");

  std::vector<double> cuts = centers;
  cuts.push_back(0.0);
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<double> slopes(cuts.size() - 1);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < centers.size(); ++i)
      if (centers[i] > cuts[k]) s += coeffs(static_cast<Eigen::Index>(i));
    slopes[k] = s;
  }
  return from_derivative(std::move(cuts), std::move(slopes));
}

SobolevFunction SobolevFunction::from_expansion(const RkhsFunction& f) {
  std::vector<double> centers;
  centers.reserve(f.centers.size());
  for (const auto& c : f.centers) {
    if (c.size() != 1) throw std::invalid_argument("from_expansion: expects 1-d centers");
    centers.push_back(c(0));
  }
  return from_expansion(centers, f.coefficients);
}

double SobolevFunction::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("SobolevFunction: evaluation point outside [0,1]");
  double acc = 0.0;
  for (std::size_t k = 0; k < slopes_.size(); ++k) {
    double overlap = std::min(x, breakpoints_[k + 1]) - breakpoints_[k];
    if (overlap <= 0.0) break;
    acc += slopes_[k] * overlap;
  }
  return acc;
}

double SobolevFunction::lp_norm(double p) const {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double s : slopes_) m = std::max(m, std::abs(s));
    return m;
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < slopes_.size(); ++k)
    acc += std::pow(std::abs(slopes_[k]), p) * (breakpoints_[k + 1] - breakpoints_[k]);
  return std::pow(acc, 1.0 / p);
}

RkhsFunction SobolevFunction::to_expansion(KernelPtr min_kernel) const {
  const std::size_t m = slopes_.size();
  std::vector<double> centers(m);
  Vector coeffs(static_cast<Eigen::Index>(m));
  for (std::size_t k = 0; k < m; ++k) {
    centers[k] = breakpoints_[k + 1];
    double next = (k + 1 < m) ? slopes_[k + 1] : 0.0;
    coeffs(static_cast<Eigen::Index>(k)) = slopes_[k] - next;
  }
  return RkhsFunction::make(std::move(min_kernel), centers, std::move(coeffs));
}

double duality_pairing(const SobolevFunction& f, const SobolevFunction& g) {
  std::vector<double> cuts;
  cuts.reserve(f.breakpoints().size() + g.breakpoints().size());
  cuts.insert(cuts.end(), f.breakpoints().begin(), f.breakpoints().end());
  cuts.insert(cuts.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto slope_at = [](const SobolevFunction& h, double t) {
    const auto& b = h.breakpoints();
    auto it = std::upper_bound(b.begin(), b.end(), t);
    std::size_t seg = static_cast<std::size_t>(it - b.begin());
    if (seg == 0) seg = 1;
    if (seg > h.slopes().size()) seg = h.slopes().size();
    return h.slopes()[seg - 1];
  };

  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    double mid = 0.5 * (cuts[k] + cuts[k + 1]);
    acc += slope_at(f, mid) * slope_at(g, mid) * (cuts[k + 1] - cuts[k]);
  }
  return acc;
}

HolderBound holder_evaluation_bound(const SobolevFunction& f, double x, double p) {
  if (p < 1.0) throw std::invalid_argument("holder_evaluation_bound: p must be >= 1");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("holder_evaluation_bound: x outside [0,1]");
  double factor;  // x^{1/q} with 1/p + 1/q = 1
  if (p == 1.0) {
    factor = 1.0;
  } else if (std::isinf(p)) {
    factor = x;
  } else {
    factor = std::pow(x, 1.0 - 1.0 / p);
  }
  const double bound = factor * f.lp_norm(p);
  return {bound, std::abs(f(x)) <= bound + 1e-12};
}

SubdualitySpec cameron_martin_subduality(double p) {
  if (p < 1.0) throw std::invalid_argument("cameron_martin_subduality: p must be >= 1");
  FeatureFamily indicator = named_feature_family("cameron_martin");
  auto eval = [](const Vector& x, const Vector& y) {
    // Exact pairing of the two indicator families: integral of
    // 1_{u <= x} 1_{u <= y} over [0,1] is min(x, y).
    return std::min(x(0), y(0));
  };
  auto kernel = std::make_shared<Kernel>(KernelKind::duality_pair, "cameron_martin_min", true,
                                         Interval::unit(), eval, nlohmann::json{{"p", p}});
  return {indicator, indicator, p, std::move(kernel)};
}

}  // namespace rk
