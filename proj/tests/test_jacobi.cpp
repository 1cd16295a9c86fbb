#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rk/jacobi.hpp"

using namespace rk;

TEST_CASE("diagonal matrix") {
  Matrix a(2, 2);
  a << 2, 0, 0, 3;
  Vector ev = symmetric_eigenvalues(a);
  CHECK(ev(0) == 2.0);
  CHECK(ev(1) == 3.0);
}

TEST_CASE("2x2 exchange matrix") {
  Matrix a(2, 2);
  a << 0, 1, 1, 0;
  Vector ev = symmetric_eigenvalues(a);
  CHECK(ev(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ev(1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("random symmetric 8x8 matches the characteristic-polynomial oracle") {
  std::mt19937 rng(31);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = gauss(rng);
  Vector got = symmetric_eigenvalues(a);
  Vector expected = oracles::char_poly_eigenvalues(a);
  CHECK((got - expected).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("eigenvalue sum equals the trace") {
  std::mt19937 rng(41);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int n : {3, 10, 25}) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = gauss(rng);
    Vector ev = symmetric_eigenvalues(a);
    CHECK(std::abs(ev.sum() - a.trace()) <= 1e-10 * std::max(1.0, std::abs(a.trace())));
  }
}

TEST_CASE("eigenvectors diagonalize the matrix") {
  std::mt19937 rng(51);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(12, 12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = gauss(rng);
  auto eig = jacobi_eigensystem(a);
  Matrix recon = eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose();
  CHECK((recon - a).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("asymmetric input is rejected") {
  Matrix a(2, 2);
  a << 0, 1, 2, 0;
  CHECK_THROWS_AS(symmetric_eigenvalues(a), std::invalid_argument);
}
