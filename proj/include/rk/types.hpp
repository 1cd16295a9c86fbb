#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rk {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A (possibly unbounded) interval on the real line.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }

  static Interval unit() { return {0.0, 1.0}; }
  static Interval real_line() { return {-kInf, kInf}; }
};

inline Vector scalar_point(double x) {
  Vector v(1);
  v(0) = x;
  return v;
}

inline std::vector<Vector> scalar_points(const std::vector<double>& xs) {
  std::vector<Vector> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(scalar_point(x));
  return out;
}

}  // namespace rk
