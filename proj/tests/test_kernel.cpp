#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "rk/kernel.hpp"
#include "rk/sobolev.hpp"

using namespace rk;

TEST_CASE("carleman kernel from the indicator family approximates min") {
  auto mu = build_quadrature(Interval::unit(), "trapezoid", 4001);
  auto k = carleman_kernel(named_feature_family("cameron_martin"), mu, Interval::unit());
  CHECK(std::abs((*k)(0.3, 0.7) - 0.3) < 1e-3);
  // The exact route (piecewise integration) hits min on the nose.
  auto exact = cameron_martin_subduality().kernel;
  CHECK((*exact)(0.3, 0.7) == 0.3);
}

TEST_CASE("carleman diagonal is a squared norm") {
  auto mu = build_quadrature(Interval::real_line(), "gauss_legendre_composite", 64, 8.0);
  auto k = carleman_kernel(named_feature_family("gaussian"), mu);
  for (double x : {-1.5, 0.0, 0.3, 2.0}) CHECK((*k)(x, x) >= 0.0);
}

TEST_CASE("gaussian carleman kernel matches the closed-form product integral") {
  auto mu = build_quadrature(Interval::real_line(), "gauss_legendre_composite", 64, 8.0);
  auto k = carleman_kernel(named_feature_family("gaussian"), mu);
  CHECK(std::abs((*k)(0.0, 2.0) - std::exp(-1.0)) < 1e-8);
  // Independent high-resolution quadrature oracle.
  auto fine = build_quadrature(Interval::real_line(), "gauss_legendre_composite", 256, 8.0);
  auto family = named_feature_family("gaussian");
  double oracle =
      fine.integrate([&](double u) { return family(0.0, u) * family(2.0, u); });
  CHECK(std::abs((*k)(0.0, 2.0) - oracle) < 1e-10);
}

TEST_CASE("carleman kernel is exactly symmetric on sampled pairs") {
  auto mu = build_quadrature(Interval::real_line(), "gauss_legendre_composite", 64, 8.0);
  auto k = carleman_kernel(named_feature_family("gaussian"), mu);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int t = 0; t < 50; ++t) {
    double x = unif(rng), y = unif(rng);
    CHECK((*k)(x, y) == (*k)(y, x));
  }
}

TEST_CASE("affine basis kernel is the linear-plus-one kernel") {
  auto k = named_basis_kernel("affine", 2);
  Vector x(2), y(2);
  x << 1, 2;
  y << 3, 4;
  CHECK((*k)(x, y) == doctest::Approx(12.0).epsilon(1e-15));
}

TEST_CASE("single constant basis function gives the constant kernel") {
  auto k = named_basis_kernel("legendre", 1);
  CHECK((*k)(0.1, 0.9) == 1.0);
  CHECK((*k)(0.5, 0.5) == 1.0);
}

TEST_CASE("weighted trigonometric basis kernel has a PSD Gram") {
  std::vector<double> weights;
  for (int i = 1; i <= 8; ++i) weights.push_back(std::pow(2.0, -i));
  auto k = named_basis_kernel("trigonometric", 8, weights);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(unif(rng));
  Matrix g = gram(*k, pts);
  Eigen::SelfAdjointEigenSolver<Matrix> es(g);
  CHECK(es.eigenvalues().minCoeff() >= -1e-12);
}

TEST_CASE("empty basis is rejected") {
  CHECK_THROWS_AS(basis_kernel({}), std::invalid_argument);
}

TEST_CASE("duality kernel with indicator pair approximates min, exact when smooth") {
  auto cm = named_feature_family("cameron_martin");
  auto mu = build_quadrature(Interval::unit(), "trapezoid", 8001);
  auto k = duality_kernel(cm, cm, mu, Interval::unit());
  CHECK(std::abs((*k)(0.4, 0.9) - 0.4) < 1e-3);

  // Gamma = Lambda makes the two recipes coincide on every pair.
  auto k2 = carleman_kernel(cm, mu, Interval::unit());
  for (double x : {0.1, 0.5, 0.8})
    for (double y : {0.2, 0.6, 1.0}) CHECK((*k)(x, y) == (*k2)(x, y));

  // At x = y = 1 both indicators are identically 1, so the quadrature
  // integrates the polynomial u exactly.
  FeatureFamily ramp{"ramp", Interval::unit(),
                     [](double y, double u) { return u <= y ? u : 0.0; }};
  auto mu_gl = build_quadrature(Interval::unit(), "gauss_legendre", 16);
  auto k3 = duality_kernel(cm, ramp, mu_gl, Interval::unit());
  CHECK(std::abs((*k3)(1.0, 1.0) - 0.5) < 1e-12);
}

TEST_CASE("closed-form kernels") {
  CHECK((*closed_form_kernel("min"))(0.25, 0.75) == 0.25);
  auto gauss = closed_form_kernel("gaussian", {{"sigma", std::sqrt(2.0)}});
  CHECK((*gauss)(1.3, 1.3) == 1.0);
  auto th = closed_form_kernel("tanh", {{"a", 1.0}, {"b", 0.0}});
  CHECK((*th)(1.0, 1.0) == doctest::Approx(std::tanh(1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(closed_form_kernel("epanechnikov"), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_kernel("gaussian", {{"sigma", -1.0}}), std::invalid_argument);
  auto ind = closed_form_kernel("indicator_equal");
  CHECK((*ind)(0.3, 0.3) == 1.0);
  CHECK((*ind)(0.3, 0.4) == 0.0);
}

TEST_CASE("gram of the min kernel") {
  auto g = gram(*closed_form_kernel("min"), std::vector<double>{0.2, 0.5, 0.9});
  Matrix expected(3, 3);
  expected << 0.2, 0.2, 0.2, 0.2, 0.5, 0.5, 0.2, 0.5, 0.9;
  CHECK((g - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("one-point gram") {
  auto g = gram(*closed_form_kernel("gaussian"), std::vector<double>{1.7});
  REQUIRE(g.rows() == 1);
  CHECK(g(0, 0) == 1.0);
}

TEST_CASE("closed-form gaussian agrees with its carleman construction") {
  auto g = gram(*closed_form_kernel("gaussian"), std::vector<double>{0.0, 2.0});
  CHECK(g(0, 0) == 1.0);
  CHECK(g(0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(g(0, 1) == g(1, 0));
  auto mu = build_quadrature(Interval::real_line(), "gauss_legendre_composite", 64, 8.0);
  auto carleman = carleman_kernel(named_feature_family("gaussian"), mu);
  CHECK(std::abs(g(0, 1) - (*carleman)(0.0, 2.0)) < 1e-8);
}

TEST_CASE("gram rejects out-of-domain points") {
  CHECK_THROWS_AS(gram(*closed_form_kernel("min"), std::vector<double>{-0.5, 0.2}),
                  std::domain_error);
}

TEST_CASE("cauchy-schwarz holds on sampled pairs for positive recipes") {
  auto mu = build_quadrature(Interval::real_line(), "gauss_legendre_composite", 64, 8.0);
  auto carleman = carleman_kernel(named_feature_family("gaussian"), mu);
  auto basis = named_basis_kernel("legendre", 4);
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> wide(-2.0, 2.0), unit(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    double x = wide(rng), y = wide(rng);
    double kxy = (*carleman)(x, y);
    CHECK(kxy * kxy <= (*carleman)(x, x) * (*carleman)(y, y) + 1e-12);
    double u = unit(rng), v = unit(rng);
    double b = (*basis)(u, v);
    CHECK(b * b <= (*basis)(u, u) * (*basis)(v, v) + 1e-12);
  }
}
