#include <doctest.h>

#include "rk/verify.hpp"

using namespace rk;

TEST_CASE("full suite passes and is large enough") {
  auto reports = run_verify_suite(42);
  CHECK(reports.size() >= 12);
  for (const auto& r : reports) {
    INFO(r.name, " measured=", r.measured, " tolerance=", r.tolerance);
    CHECK(r.pass);
  }
}

TEST_CASE("the tanh check passes by exhibiting a violation") {
  auto reports = run_verify_suite(42, "positivity");
  bool seen = false;
  for (const auto& r : reports)
    if (r.name == "positivity.tanh_violation") {
      seen = true;
      CHECK(r.pass);
      CHECK(r.measured < -1e-6);
      CHECK(r.details.contains("points"));
    }
  CHECK(seen);
}

TEST_CASE("group filter returns exactly the table-1 reports") {
  auto reports = run_verify_suite(42, "table1");
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) CHECK(r.name.starts_with("table1."));
  CHECK_THROWS_AS(run_verify_suite(42, "no_such_group"), std::invalid_argument);
}

TEST_CASE("suite is deterministic given the seed") {
  auto a = reports_to_json(run_verify_suite(7)).dump(2);
  auto b = reports_to_json(run_verify_suite(7)).dump(2);
  CHECK(a == b);
}

TEST_CASE("seed changes samples but not verdicts") {
  auto a = run_verify_suite(7);
  auto b = run_verify_suite(8);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].pass == b[i].pass);
  }
}
