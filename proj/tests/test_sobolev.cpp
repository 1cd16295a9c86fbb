#include <doctest.h>

#include <cmath>
#include <random>

#include "rk/sobolev.hpp"

using namespace rk;

namespace {

SobolevFunction min_section(double c, double coeff = 1.0) {
  Vector a(1);
  a << coeff;
  return SobolevFunction::from_expansion({c}, a);
}

}  // namespace

TEST_CASE("lp norms of a single min section") {
  auto f = min_section(0.5);
  CHECK(f.lp_norm(1.0) == 0.5);
  CHECK(f.lp_norm(kInf) == 1.0);
}

TEST_CASE("l2 norm of a two-section expansion against a grid oracle") {
  Vector a(2);
  a << 2.0, -1.0;
  auto f = SobolevFunction::from_expansion({0.25, 0.75}, a);
  CHECK(f.lp_norm(2.0) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
  // Brute-force grid integration of |f'|^2 via finite differences.
  const int cells = 200000;
  double acc = 0.0;
  for (int k = 0; k < cells; ++k) {
    double lo = static_cast<double>(k) / cells, hi = static_cast<double>(k + 1) / cells;
    double slope = (f(hi) - f(lo)) * cells;
    acc += slope * slope / cells;
  }
  CHECK(std::sqrt(acc) == doctest::Approx(f.lp_norm(2.0)).epsilon(1e-9));
}

TEST_CASE("duality pairing on min sections") {
  CHECK(duality_pairing(min_section(0.5), min_section(0.5)) == 0.5);
  CHECK(duality_pairing(min_section(0.7), SobolevFunction{}) == 0.0);
  CHECK(duality_pairing(min_section(0.2), min_section(0.8)) == 0.2);
}

TEST_CASE("p = 2 pairing collapses to the RKHS inner product") {
  auto mink = closed_form_kernel("min");
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> unif(0.01, 1.0);
  std::normal_distribution<double> coeff(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> cf(4), cg(4);
    Vector af(4), ag(4);
    for (int i = 0; i < 4; ++i) {
      cf[static_cast<std::size_t>(i)] = unif(rng);
      cg[static_cast<std::size_t>(i)] = unif(rng);
      af(i) = coeff(rng);
      ag(i) = coeff(rng);
    }
    auto f = RkhsFunction::make(mink, cf, af);
    auto g = RkhsFunction::make(mink, cg, ag);
    double pairing = duality_pairing(SobolevFunction::from_expansion(f),
                                     SobolevFunction::from_expansion(g));
    CHECK(std::abs(pairing - inner_product(f, g)) < 1e-12);
  }
}

TEST_CASE("hoelder evaluation bounds") {
  auto f = min_section(0.5);
  SUBCASE("p = 1: the constant is 1 for every x") {
    auto hb = holder_evaluation_bound(f, 0.9, 1.0);
    CHECK(hb.bound == f.lp_norm(1.0));
    CHECK(hb.satisfied);
  }
  SUBCASE("p = inf is tight at x below the kink") {
    auto hb = holder_evaluation_bound(f, 0.3, kInf);
    CHECK(hb.bound == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(hb.satisfied);
  }
  SUBCASE("zero function is trivially within bound 0") {
    auto hb = holder_evaluation_bound(SobolevFunction{}, 0.5, 2.0);
    CHECK(hb.bound == 0.0);
    CHECK(hb.satisfied);
  }
  SUBCASE("p < 1 is rejected") {
    CHECK_THROWS_AS(holder_evaluation_bound(f, 0.5, 0.5), std::invalid_argument);
  }
}

TEST_CASE("hoelder bounds hold over randomized functions and exponents") {
  std::mt19937 rng(111);
  std::uniform_real_distribution<double> unif(0.01, 1.0);
  std::normal_distribution<double> coeff(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> centers(5);
    Vector a(5);
    for (int i = 0; i < 5; ++i) {
      centers[static_cast<std::size_t>(i)] = unif(rng);
      a(i) = coeff(rng);
    }
    auto f = SobolevFunction::from_expansion(centers, a);
    for (double p : {1.0, 1.5, 2.0, 3.0, kInf})
      CHECK(holder_evaluation_bound(f, unif(rng), p).satisfied);
  }
}

TEST_CASE("derivative structure of an expansion matches the suffix-sum rule") {
  Vector a(2);
  a << 2.0, -1.0;
  auto f = SobolevFunction::from_expansion({0.25, 0.75}, a);
  REQUIRE(f.slopes().size() == 3);
  CHECK(f.slopes()[0] == 1.0);   // both centers above
  CHECK(f.slopes()[1] == -1.0);  // only 0.75 above
  CHECK(f.slopes()[2] == 0.0);   // none above
}

TEST_CASE("expansion <-> derivative round trip preserves evaluation") {
  auto mink = closed_form_kernel("min");
  std::mt19937 rng(121);
  std::uniform_real_distribution<double> unif(0.01, 1.0);
  std::normal_distribution<double> coeff(0.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> centers(6);
    Vector a(6);
    for (int i = 0; i < 6; ++i) {
      centers[static_cast<std::size_t>(i)] = unif(rng);
      a(i) = coeff(rng);
    }
    auto f = RkhsFunction::make(mink, centers, a);
    auto back = SobolevFunction::from_expansion(f).to_expansion(mink);
    for (int k = 0; k < 100; ++k) {
      double x = unif(rng);
      CHECK(std::abs(evaluate(f, x) - evaluate(back, x)) < 1e-12);
    }
  }
}

TEST_CASE("cameron-martin subduality kernel") {
  auto sd = cameron_martin_subduality();
  CHECK((*sd.kernel)(0.3, 0.7) == 0.3);
  for (double y : {0.0, 0.4, 1.0}) CHECK((*sd.kernel)(0.0, y) == 0.0);
  std::mt19937 rng(131);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    double x = unif(rng), y = unif(rng);
    CHECK((*sd.kernel)(x, y) == (*sd.kernel)(y, x));
  }
}

TEST_CASE("invalid representations are rejected") {
  Vector one = Vector::Ones(1);
  CHECK_THROWS_AS(SobolevFunction::from_expansion({1.5}, one), std::invalid_argument);
  CHECK_THROWS_AS(SobolevFunction::from_expansion({0.0}, one), std::invalid_argument);
  CHECK_THROWS_AS(SobolevFunction::from_derivative({0.0, 0.5}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SobolevFunction::from_derivative({0.0, 0.5, 0.5, 1.0}, {1.0, 2.0, 3.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(min_section(0.5).lp_norm(0.9), std::invalid_argument);
}
