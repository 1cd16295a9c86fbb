#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rk/kernel.hpp"
#include "rk/rkhs.hpp"
#include "rk/sobolev.hpp"
#include "rk/solvers.hpp"

namespace rk {

/// Schema version accepted by every JSON reader; unknown fields are rejected.
inline constexpr int kSchemaVersion = 1;

/// {"schema_version": 1, "kind": ..., "name": ..., "params": {...},
///  "domain": [lo, hi], "quadrature": {...}}
nlohmann::json kernel_to_json(const Kernel& kernel);
KernelPtr kernel_from_json(const nlohmann::json& j);

nlohmann::json rkhs_function_to_json(const RkhsFunction& f);
RkhsFunction rkhs_function_from_json(const nlohmann::json& j);

/// {"breakpoints": [...], "slopes": [...]}
nlohmann::json sobolev_to_json(const SobolevFunction& f);
SobolevFunction sobolev_from_json(const nlohmann::json& j);

nlohmann::json fit_result_to_json(const FitResult& r);

/// CSV with mandatory header; columns x[,x2,...],y.
Dataset read_dataset_csv(std::istream& in);
Dataset read_dataset_csv(const std::string& path);

/// CSV of points, columns x[,x2,...].
std::vector<Vector> read_points_csv(std::istream& in);
std::vector<Vector> read_points_csv(const std::string& path);

/// Row-major Gram CSV; the header carries the point coordinates.
void write_gram_csv(std::ostream& out, const Matrix& g, const std::vector<Vector>& points);

/// Shortest-roundtrip decimal formatting, used for all CSV numbers so that
/// identical runs produce byte-identical files.
std::string format_number(double v);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace rk
