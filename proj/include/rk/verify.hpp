#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rk {

struct CheckReport {
  std::string name;
  bool pass = false;
  double measured = 0.0;   // worst deviation seen, or the witness eigenvalue
  double tolerance = 0.0;
  std::string anchor;
  nlohmann::json details;  // check-specific payload (witness points etc.)
};

std::vector<CheckReport> verify_table1();
std::vector<CheckReport> verify_basis_roundtrip(unsigned seed);
std::vector<CheckReport> verify_positivity_suite(unsigned seed);
std::vector<CheckReport> verify_subduality_consistency(unsigned seed);

/// Runs every check group (or one group when `only` is nonempty: "table1",
/// "basis_roundtrip", "positivity", "subduality"), deterministic given the
/// seed, reports merged in manifest order.
std::vector<CheckReport> run_verify_suite(unsigned seed, const std::string& only = "");

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports);
bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace rk
