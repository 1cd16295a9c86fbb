#include "rk/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rk {

std::vector<Vector> Dataset::points() const {
  std::vector<Vector> pts;
  pts.reserve(static_cast<std::size_t>(xs.rows()));
  for (Eigen::Index i = 0; i < xs.rows(); ++i) pts.push_back(xs.row(i).transpose());
  return pts;
}

Dataset Dataset::from_scalar(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("Dataset: xs/ys must be nonempty and of equal length");
  Dataset d;
  d.xs.resize(static_cast<Eigen::Index>(xs.size()), 1);
  d.ys.resize(static_cast<Eigen::Index>(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i]))
      throw std::invalid_argument("Dataset: non-finite value");
    d.xs(static_cast<Eigen::Index>(i), 0) = xs[i];
    d.ys(static_cast<Eigen::Index>(i)) = ys[i];
  }
  return d;
}

double krr_objective(const RkhsFunction& model, const Dataset& data, double lambda) {
  const Eigen::Index n = data.size();
  double sse = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double r = evaluate(model, Vector(data.xs.row(i).transpose())) - data.ys(i);
    sse += r * r;
  }
  return sse / static_cast<double>(n) + lambda * squared_norm(model);
}

double pnorm_objective(const RkhsFunction& model, const Dataset& data, double lambda, double p) {
  const Eigen::Index n = data.size();
  double sse = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double r = evaluate(model, Vector(data.xs.row(i).transpose())) - data.ys(i);
    sse += r * r;
  }
  const SobolevFunction sf = SobolevFunction::from_expansion(model);
  return sse + lambda * std::pow(sf.lp_norm(p), p);
}

FitResult fit_krr(KernelPtr kernel, const Dataset& data, const FitConfig& config) {
  if (!kernel->symmetric()) throw std::invalid_argument("fit_krr: kernel must be symmetric");
  if (config.lambda < 0.0) throw std::invalid_argument("fit_krr: lambda must be >= 0");
  const Eigen::Index n = data.size();
  const auto pts = data.points();
  const Matrix g = gram(*kernel, pts);
  Matrix a = g + static_cast<double>(n) * config.lambda * Matrix::Identity(n, n);

  Eigen::LDLT<Matrix> ldlt(a);
  if (ldlt.info() != Eigen::Success)
    throw std::runtime_error("fit_krr: factorization failed");
  Vector alpha = ldlt.solve(data.ys);
  const double residual_norm = (a * alpha - data.ys).lpNorm<Eigen::Infinity>();
  const double ynorm = std::max(1.0, data.ys.lpNorm<Eigen::Infinity>());
  if (residual_norm > 1e-8 * ynorm)
    throw std::runtime_error(
        "fit_krr: singular system (lambda = 0 with rank-deficient Gram?)");

  FitResult out;
  out.model = RkhsFunction::make(kernel, pts, alpha);
  out.diagnostics.residuals = g * alpha - data.ys;
  out.diagnostics.iterations = 1;
  out.diagnostics.gradient_norm = residual_norm;
  out.diagnostics.converged = true;
  out.solver = "krr";
  out.lambda = config.lambda;
  out.p = 2.0;
  out.objective = krr_objective(out.model, data, config.lambda);
  return out;
}

namespace {

/// Segment structure of f' for expansions over min sections at the data
/// points: cuts = {0, sorted centers, 1}, c = L alpha per segment.
struct SegmentGrid {
  std::vector<double> cuts;  // m + 1 values
  Matrix indicator;          // m x n, row k: 1_{x_i > cuts[k]}
  Vector lengths;            // m
};

SegmentGrid build_segments(const Vector& centers) {
  std::vector<double> cuts(centers.data(), centers.data() + centers.size());
  cuts.push_back(0.0);
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const Eigen::Index m = static_cast<Eigen::Index>(cuts.size()) - 1;
  SegmentGrid sg;
  sg.cuts = cuts;
  sg.indicator = Matrix::Zero(m, centers.size());
  sg.lengths.resize(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    sg.lengths(k) = cuts[static_cast<std::size_t>(k) + 1] - cuts[static_cast<std::size_t>(k)];
    for (Eigen::Index i = 0; i < centers.size(); ++i)
      if (centers(i) > cuts[static_cast<std::size_t>(k)]) sg.indicator(k, i) = 1.0;
  }
  return sg;
}

}  // namespace

FitResult fit_pnorm(const Dataset& data, const FitConfig& config) {
  if (config.p < 1.0) throw std::invalid_argument("fit_pnorm: p < 1 is non-convex, refused");
  if (config.lambda <= 0.0) throw std::invalid_argument("fit_pnorm: lambda must be > 0");
  if (data.xs.cols() != 1) throw std::invalid_argument("fit_pnorm: expects 1-d inputs");
  const Eigen::Index n = data.size();
  Vector centers = data.xs.col(0);
  for (Eigen::Index i = 0; i < n; ++i)
    if (!(centers(i) > 0.0 && centers(i) <= 1.0))
      throw std::invalid_argument("fit_pnorm: data points must lie in (0, 1]");

  auto min_kernel = closed_form_kernel("min");
  const auto pts = data.points();
  const Matrix g = gram(*min_kernel, pts);
  const SegmentGrid sg = build_segments(centers);
  const double lambda = config.lambda;
  const double p = config.p;

  auto objective = [&](const Vector& alpha) {
    Vector c = sg.indicator * alpha;
    double omega = 0.0;
    for (Eigen::Index k = 0; k < c.size(); ++k)
      omega += std::pow(std::abs(c(k)), p) * sg.lengths(k);
    return (g * alpha - data.ys).squaredNorm() + lambda * omega;
  };
  auto gradient = [&](const Vector& alpha) {
    Vector c = sg.indicator * alpha;
    Vector d(c.size());
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      // Subgradient choice 0 at c = 0 (valid for every p >= 1).
      d(k) = c(k) == 0.0
                 ? 0.0
                 : p * std::pow(std::abs(c(k)), p - 1.0) * (c(k) > 0.0 ? 1.0 : -1.0) *
                       sg.lengths(k);
    }
    return Vector(2.0 * g * (g * alpha - data.ys) + lambda * sg.indicator.transpose() * d);
  };

  // Smoothed penalty (c^2 + eps^2)^{p/2}, driven to the true |c|^p by a
  // continuation in eps. Each stage is minimized by damped Newton; the
  // smoothed Hessian 2 G^2 + lambda L^T D L stays positive definite.
  auto smooth_objective = [&](const Vector& alpha, double eps) {
    Vector c = sg.indicator * alpha;
    double omega = 0.0;
    for (Eigen::Index k = 0; k < c.size(); ++k)
      omega += std::pow(c(k) * c(k) + eps * eps, p / 2.0) * sg.lengths(k);
    return (g * alpha - data.ys).squaredNorm() + lambda * omega;
  };
  auto smooth_gradient = [&](const Vector& alpha, double eps) {
    Vector c = sg.indicator * alpha;
    Vector d(c.size());
    for (Eigen::Index k = 0; k < c.size(); ++k)
      d(k) = p * c(k) * std::pow(c(k) * c(k) + eps * eps, p / 2.0 - 1.0) * sg.lengths(k);
    return Vector(2.0 * g * (g * alpha - data.ys) + lambda * sg.indicator.transpose() * d);
  };
  auto smooth_hessian = [&](const Vector& alpha, double eps) {
    Vector c = sg.indicator * alpha;
    Vector d(c.size());
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      double s = c(k) * c(k) + eps * eps;
      d(k) = p * std::pow(s, p / 2.0 - 2.0) * ((p - 1.0) * c(k) * c(k) + eps * eps) *
             sg.lengths(k);
    }
    return Matrix(2.0 * g * g + lambda * sg.indicator.transpose() * d.asDiagonal() *
                                    sg.indicator);
  };

  // Warm start from the p = 2 solution, which is exact when p = 2 since the
  // segment form of Omega collapses to alpha^T G alpha.
  Vector alpha =
      Eigen::LDLT<Matrix>(g + lambda * Matrix::Identity(n, n)).solve(data.ys);

  int iter = 0;
  double grad_norm = gradient(alpha).lpNorm<Eigen::Infinity>();
  bool converged = grad_norm <= config.gradient_tolerance;
  for (double eps = 1e-1; !converged && eps >= 1e-15; eps *= 1e-2) {
    for (; iter < config.max_iterations; ++iter) {
      Vector grad = smooth_gradient(alpha, eps);
      if (grad.lpNorm<Eigen::Infinity>() <= std::min(config.gradient_tolerance, eps)) break;
      Vector dir = Eigen::LDLT<Matrix>(smooth_hessian(alpha, eps)).solve(grad);
      double j_cur = smooth_objective(alpha, eps);
      double t = 1.0;
      bool ok = false;
      for (int bt = 0; bt < 60; ++bt) {
        Vector cand = alpha - t * dir;
        if (smooth_objective(cand, eps) <= j_cur - 1e-4 * t * grad.dot(dir)) {
          alpha = cand;
          ok = true;
          break;
        }
        t *= 0.5;
      }
      if (!ok) break;  // no descent at machine precision
    }
    grad_norm = gradient(alpha).lpNorm<Eigen::Infinity>();
    converged = grad_norm <= config.gradient_tolerance;
    if (iter >= config.max_iterations) break;
  }
  double j = objective(alpha);

  FitResult out;
  out.model = RkhsFunction::make(min_kernel, pts, alpha);
  out.diagnostics.iterations = iter;
  out.diagnostics.gradient_norm = grad_norm;
  out.diagnostics.residuals = g * alpha - data.ys;
  out.diagnostics.converged = converged || grad_norm <= 1e-6;
  out.solver = "pnorm";
  out.lambda = lambda;
  out.p = p;
  out.objective = j;
  return out;
}

namespace {

double perturbed_objective(const FitResult& result, const Dataset& data,
                           const RkhsFunction& candidate) {
  if (result.solver == "krr") return krr_objective(candidate, data, result.lambda);
  return pnorm_objective(candidate, data, result.lambda, result.p);
}

}  // namespace

double representer_optimality_probe(const FitResult& result, const Dataset& data, int trials,
                                    unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  const Eigen::Index n = data.size();
  const auto pts = data.points();
  const Matrix g = gram(*result.model.kernel, pts);
  Eigen::LDLT<Matrix> ldlt(g);

  const double base = perturbed_objective(result, data, result.model);
  const double scale = std::max(1.0, result.model.coefficients.norm());
  const std::vector<double> steps = {1e-1, 1e-2, 1e-3, 1e-4};

  double max_improvement = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const bool in_span = (trial % 2 == 0);
    if (in_span) {
      Vector delta(n);
      for (Eigen::Index i = 0; i < n; ++i) delta(i) = gauss(rng);
      delta.normalize();
      for (double t : steps) {
        for (double s : {t * scale, -t * scale}) {
          RkhsFunction cand{result.model.kernel, result.model.centers,
                            result.model.coefficients + s * delta};
          max_improvement = std::max(max_improvement,
                                     base - perturbed_objective(result, data, cand));
        }
      }
    } else {
      // Direction K(., z) - sum c_i K(., x_i) with G c = k_z vanishes at
      // every data point, so the data-fit term is unchanged along it.
      double lo = 0.0, hi = 1.0;
      if (result.solver == "krr" && data.xs.cols() == 1) {
        lo = data.xs.col(0).minCoeff();
        hi = data.xs.col(0).maxCoeff();
      }
      double z = lo + (hi - lo) * unif(rng);
      if (result.solver == "pnorm") z = std::min(std::max(z, 1e-6), 1.0);
      if (data.xs.cols() != 1) continue;

      Vector kz(n);
      for (Eigen::Index i = 0; i < n; ++i) kz(i) = (*result.model.kernel)(z, pts[i](0));
      Vector c = ldlt.solve(kz);
      if ((g * c - kz).lpNorm<Eigen::Infinity>() > 1e-8 * std::max(1.0, kz.norm())) continue;

      std::vector<Vector> centers = result.model.centers;
      centers.push_back(scalar_point(z));
      for (double t : steps) {
        for (double s : {t * scale, -t * scale}) {
          Vector coeffs(n + 1);
          coeffs.head(n) = result.model.coefficients - s * c;
          coeffs(n) = s;
          RkhsFunction cand{result.model.kernel, centers, coeffs};
          max_improvement = std::max(max_improvement,
                                     base - perturbed_objective(result, data, cand));
        }
      }
    }
  }
  return max_improvement;
}

}  // namespace rk
