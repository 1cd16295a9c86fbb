// Test-only oracles, independent of the library's solution paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracles {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense linear solve by Gaussian elimination with partial pivoting,
/// hand-rolled so it shares nothing with the solver under test.
inline Vector gaussian_elimination_solve(Matrix a, Vector b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (std::abs(a(pivot, col)) < 1e-300) throw std::runtime_error("oracle: singular matrix");
    a.row(col).swap(a.row(pivot));
    std::swap(b(col), b(pivot));
    for (Eigen::Index r = col + 1; r < n; ++r) {
      double m = a(r, col) / a(col, col);
      a.row(r) -= m * a.row(col);
      b(r) -= m * b(col);
    }
  }
  Vector x(n);
  for (Eigen::Index r = n - 1; r >= 0; --r) {
    double acc = b(r);
    for (Eigen::Index c = r + 1; c < n; ++c) acc -= a(r, c) * x(c);
    x(r) = acc / a(r, r);
  }
  return x;
}

/// Eigenvalues through the characteristic polynomial: Faddeev-LeVerrier
/// coefficients, then roots of the companion matrix (unsymmetric QR).
inline Vector char_poly_eigenvalues(const Matrix& a) {
  const Eigen::Index n = a.rows();
  // p(z) = z^n - c_1 z^{n-1} - ... - c_n
  std::vector<double> c(static_cast<std::size_t>(n));
  Matrix m = a;
  c[0] = m.trace();
  for (Eigen::Index k = 1; k < n; ++k) {
    m = a * (m - c[static_cast<std::size_t>(k) - 1] * Matrix::Identity(n, n));
    c[static_cast<std::size_t>(k)] = m.trace() / static_cast<double>(k + 1);
  }
  Matrix companion = Matrix::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) companion(0, i) = c[static_cast<std::size_t>(i)];
  Eigen::EigenSolver<Matrix> es(companion);
  Vector roots = es.eigenvalues().real();
  std::sort(roots.data(), roots.data() + roots.size());
  return roots;
}

/// Function-space oracle for the p-norm fit: minimizes
///   J(c) = ||A c - y||^2 + lambda h sum |c_k|^p
/// over piecewise-constant derivatives on a uniform grid of `cells` cells,
/// by gradient descent with backtracking. The feasible set strictly contains
/// every representer candidate whose centers sit on the grid.
inline double pnorm_grid_oracle(const Vector& xs, const Vector& ys, double lambda, double p,
                                int cells, int max_iters = 200000) {
  const Eigen::Index n = xs.size();
  const double h = 1.0 / cells;
  Matrix a(n, cells);
  for (Eigen::Index i = 0; i < n; ++i)
    for (int k = 0; k < cells; ++k)
      a(i, k) = std::clamp(xs(i) - k * h, 0.0, h);

  auto objective = [&](const Vector& c) {
    double omega = 0.0;
    for (int k = 0; k < cells; ++k) omega += std::pow(std::abs(c(k)), p);
    return (a * c - ys).squaredNorm() + lambda * h * omega;
  };
  auto gradient = [&](const Vector& c) {
    Vector d(cells);
    for (int k = 0; k < cells; ++k)
      d(k) = c(k) == 0.0 ? 0.0
                         : lambda * h * p * std::pow(std::abs(c(k)), p - 1.0) *
                               (c(k) > 0.0 ? 1.0 : -1.0);
    return Vector(2.0 * a.transpose() * (a * c - ys) + d);
  };

  Vector c = Vector::Zero(cells);
  double j = objective(c);
  double step = 1.0;
  for (int iter = 0; iter < max_iters; ++iter) {
    Vector g = gradient(c);
    if (g.lpNorm<Eigen::Infinity>() < 1e-8) break;
    double t = step * 4.0;
    bool ok = false;
    Vector cand;
    double j_next = 0.0;
    for (int bt = 0; bt < 80; ++bt) {
      cand = c - t * g;
      j_next = objective(cand);
      if (j_next <= j - 1e-4 * t * g.squaredNorm()) {
        ok = true;
        break;
      }
      t *= 0.5;
    }
    if (!ok) break;
    c = cand;
    j = j_next;
    step = t;
  }
  return j;
}

}  // namespace oracles
