#include "rk/serialization.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace rk {

namespace {

nlohmann::json domain_to_json(const Interval& d) {
  nlohmann::json lo = std::isfinite(d.lo) ? nlohmann::json(d.lo) : nlohmann::json("-inf");
  nlohmann::json hi = std::isfinite(d.hi) ? nlohmann::json(d.hi) : nlohmann::json("inf");
  return nlohmann::json::array({lo, hi});
}

Interval domain_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("kernel spec: domain must be a 2-element array");
  auto side = [](const nlohmann::json& v, double sign) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string() && (v == "inf" || v == "-inf"))
      return v == "inf" ? kInf : -kInf;
    (void)sign;
    throw std::invalid_argument("kernel spec: domain entries must be numbers or \"inf\"");
  };
  return {side(j[0], -1.0), side(j[1], 1.0)};
}

void reject_unknown_fields(const nlohmann::json& j, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.contains(it.key()))
      throw std::invalid_argument("unknown field /" + where + "/" + it.key());
}

QuadratureMeasure quadrature_from_json(const nlohmann::json& q, const Interval& domain) {
  reject_unknown_fields(q, {"rule", "resolution", "truncation_radius"}, "quadrature");
  return build_quadrature(domain, q.at("rule").get<std::string>(),
                          q.at("resolution").get<int>(), q.value("truncation_radius", 0.0));
}

}  // namespace

nlohmann::json kernel_to_json(const Kernel& kernel) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = to_string(kernel.kind());
  j["name"] = kernel.name();
  nlohmann::json params = kernel.params();
  if (params.contains("quadrature")) {
    j["quadrature"] = params["quadrature"];
    params.erase("quadrature");
  }
  j["params"] = params;
  j["domain"] = domain_to_json(kernel.domain());
  return j;
}

KernelPtr kernel_from_json(const nlohmann::json& j) {
  reject_unknown_fields(j, {"schema_version", "kind", "name", "params", "domain", "quadrature"},
                        "");
  if (j.value("schema_version", -1) != kSchemaVersion)
    throw std::invalid_argument("kernel spec: unsupported or missing schema_version");
  const auto kind = kernel_kind_from_string(j.at("kind").get<std::string>());
  const nlohmann::json params = j.value("params", nlohmann::json::object());

  if (kind == KernelKind::closed_form) {
    std::string name = j.at("name").get<std::string>();
    return closed_form_kernel(name, params);
  }
  if (kind == KernelKind::basis_sum) {
    return named_basis_kernel(params.at("basis").get<std::string>(),
                              params.at("order").get<int>(),
                              params.value("weights", std::vector<double>{}));
  }
  if (kind == KernelKind::carleman) {
    auto family = named_feature_family(params.at("feature_family").get<std::string>());
    auto mu = quadrature_from_json(j.at("quadrature"), family.domain);
    Interval domain =
        j.contains("domain") ? domain_from_json(j.at("domain")) : Interval::real_line();
    return carleman_kernel(family, mu, domain);
  }
  // duality_pair
  if (j.value("name", "") == "cameron_martin_min")
    return cameron_martin_subduality(params.value("p", 1.0)).kernel;
  auto gamma = named_feature_family(params.at("gamma").get<std::string>());
  auto lambda = named_feature_family(params.at("lambda").get<std::string>());
  auto mu = quadrature_from_json(j.at("quadrature"), gamma.domain);
  Interval domain =
      j.contains("domain") ? domain_from_json(j.at("domain")) : Interval::real_line();
  return duality_kernel(gamma, lambda, mu, domain);
}

nlohmann::json rkhs_function_to_json(const RkhsFunction& f) {
  nlohmann::json centers = nlohmann::json::array();
  for (const auto& c : f.centers) {
    if (c.size() == 1) {
      centers.push_back(c(0));
    } else {
      nlohmann::json point = nlohmann::json::array();
      for (Eigen::Index i = 0; i < c.size(); ++i) point.push_back(c(i));
      centers.push_back(point);
    }
  }
  return {{"schema_version", kSchemaVersion},
          {"kernel", kernel_to_json(*f.kernel)},
          {"centers", centers},
          {"coefficients", std::vector<double>(f.coefficients.data(),
                                               f.coefficients.data() + f.coefficients.size())}};
}

RkhsFunction rkhs_function_from_json(const nlohmann::json& j) {
  reject_unknown_fields(j, {"schema_version", "kernel", "centers", "coefficients"}, "");
  if (j.value("schema_version", -1) != kSchemaVersion)
    throw std::invalid_argument("rkhs function: unsupported or missing schema_version");
  auto kernel = kernel_from_json(j.at("kernel"));
  std::vector<Vector> centers;
  for (const auto& c : j.at("centers")) {
    if (c.is_number()) {
      centers.push_back(scalar_point(c.get<double>()));
    } else {
      Vector v(static_cast<Eigen::Index>(c.size()));
      for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Eigen::Index>(i)) = c[i];
      centers.push_back(v);
    }
  }
  auto coeffs = j.at("coefficients").get<std::vector<double>>();
  Vector alpha = Eigen::Map<const Vector>(coeffs.data(), static_cast<Eigen::Index>(coeffs.size()));
  return RkhsFunction::make(std::move(kernel), std::move(centers), std::move(alpha));
}

nlohmann::json sobolev_to_json(const SobolevFunction& f) {
  return {{"breakpoints", f.breakpoints()}, {"slopes", f.slopes()}};
}

SobolevFunction sobolev_from_json(const nlohmann::json& j) {
  reject_unknown_fields(j, {"breakpoints", "slopes"}, "");
  return SobolevFunction::from_derivative(j.at("breakpoints").get<std::vector<double>>(),
                                          j.at("slopes").get<std::vector<double>>());
}

nlohmann::json fit_result_to_json(const FitResult& r) {
  nlohmann::json j = rkhs_function_to_json(r.model);
  j["solver"] = r.solver;
  j["lambda"] = r.lambda;
  if (r.solver == "pnorm") j["p"] = r.p;
  j["objective"] = r.objective;
  j["diagnostics"] = {
      {"iterations", r.diagnostics.iterations},
      {"gradient_norm", r.diagnostics.gradient_norm},
      {"converged", r.diagnostics.converged},
      {"residuals",
       std::vector<double>(r.diagnostics.residuals.data(),
                           r.diagnostics.residuals.data() + r.diagnostics.residuals.size())}};
  return j;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_cell(const std::string& s, int line_no) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("csv: bad number '" + s + "' at line " +
                                std::to_string(line_no));
  }
}

std::vector<std::vector<double>> read_numeric_csv(std::istream& in, std::size_t& columns) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("csv: empty file (header required)");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  columns = split_csv_line(line).size();
  if (columns == 0) throw std::invalid_argument("csv: empty header");

  std::vector<std::vector<double>> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != columns)
      throw std::invalid_argument("csv: wrong column count at line " + std::to_string(line_no));
    std::vector<double> row;
    row.reserve(columns);
    for (const auto& c : cells) row.push_back(parse_cell(c, line_no));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Dataset read_dataset_csv(std::istream& in) {
  std::size_t columns = 0;
  auto rows = read_numeric_csv(in, columns);
  if (columns < 2) throw std::invalid_argument("dataset csv: need x columns and a y column");
  if (rows.empty()) throw std::invalid_argument("dataset csv: no data rows");
  Dataset d;
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index dim = static_cast<Eigen::Index>(columns) - 1;
  d.xs.resize(n, dim);
  d.ys.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < dim; ++k) d.xs(i, k) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    d.ys(i) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(dim)];
  }
  return d;
}

Dataset read_dataset_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset csv: " + path);
  return read_dataset_csv(in);
}

std::vector<Vector> read_points_csv(std::istream& in) {
  std::size_t columns = 0;
  auto rows = read_numeric_csv(in, columns);
  std::vector<Vector> pts;
  pts.reserve(rows.size());
  for (const auto& row : rows) {
    Vector v(static_cast<Eigen::Index>(row.size()));
    for (std::size_t k = 0; k < row.size(); ++k) v(static_cast<Eigen::Index>(k)) = row[k];
    pts.push_back(std::move(v));
  }
  return pts;
}

std::vector<Vector> read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open points csv: " + path);
  return read_points_csv(in);
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_number failed");
  return std::string(buf, ptr);
}

void write_gram_csv(std::ostream& out, const Matrix& g, const std::vector<Vector>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out << ",";
    const Vector& p = points[i];
    for (Eigen::Index k = 0; k < p.size(); ++k) {
      if (k) out << ";";
      out << format_number(p(k));
    }
  }
  out << "\n";
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (j) out << ",";
      out << format_number(g(i, j));
    }
    out << "\n";
  }
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open json file: " + path);
  return nlohmann::json::parse(in);
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write json file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace rk
