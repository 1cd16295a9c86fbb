// Command-line front end: kernel evaluation, Gram export, positivity
// verdicts, regularized fits, and the verification suite, all over JSON/CSV
// files. Every number comes from a library call.

#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rk/positivity.hpp"
#include "rk/serialization.hpp"
#include "rk/solvers.hpp"
#include "rk/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitNoConvergence = 3;

rk::KernelPtr load_kernel(const std::string& spec_path, int resolution_override) {
  nlohmann::json spec = rk::load_json_file(spec_path);
  if (resolution_override > 0 && spec.contains("quadrature"))
    spec["quadrature"]["resolution"] = resolution_override;
  return rk::kernel_from_json(spec);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  return out;
}

int cmd_kernel_eval(const std::string& spec_path, const std::string& pairs_path,
                    int grid, const std::string& out_path, int resolution) {
  auto kernel = load_kernel(spec_path, resolution);

  std::vector<std::pair<double, double>> pairs;
  if (!pairs_path.empty()) {
    for (const auto& row : rk::read_points_csv(pairs_path)) {
      if (row.size() != 2)
        throw std::invalid_argument("kernel-eval: pairs csv needs exactly two columns");
      pairs.emplace_back(row(0), row(1));
    }
  } else {
    if (grid <= 0) throw std::invalid_argument("kernel-eval: need --pairs or --grid");
    const auto& d = kernel->domain();
    if (!d.bounded()) throw std::invalid_argument("kernel-eval: --grid needs a bounded domain");
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j) {
        double x = d.lo + (d.hi - d.lo) * (i + 0.5) / grid;
        double y = d.lo + (d.hi - d.lo) * (j + 0.5) / grid;
        pairs.emplace_back(x, y);
      }
  }

  auto out = open_out(out_path);
  out << "x,y,K\n";
  for (auto [x, y] : pairs)
    out << rk::format_number(x) << "," << rk::format_number(y) << ","
        << rk::format_number((*kernel)(x, y)) << "\n";
  return kExitOk;
}

int cmd_gram(const std::string& spec_path, const std::string& points_path,
             const std::string& out_path, int resolution) {
  auto kernel = load_kernel(spec_path, resolution);
  auto points = rk::read_points_csv(points_path);
  auto g = rk::gram(*kernel, points);
  auto out = open_out(out_path);
  rk::write_gram_csv(out, g, points);
  return kExitOk;
}

int cmd_check_psd(const std::string& spec_path, const std::string& points_path, int sample,
                  unsigned seed, double tolerance, bool symmetrize,
                  const std::string& out_path, int resolution) {
  auto kernel = load_kernel(spec_path, resolution);

  std::vector<rk::Vector> points;
  if (!points_path.empty()) {
    points = rk::read_points_csv(points_path);
  } else {
    std::mt19937 rng(seed);
    const auto& d = kernel->domain();
    double lo = std::isfinite(d.lo) ? d.lo : -2.0;
    double hi = std::isfinite(d.hi) ? d.hi : 2.0;
    std::uniform_real_distribution<double> unif(lo, hi);
    for (int i = 0; i < sample; ++i) points.push_back(rk::scalar_point(unif(rng)));
  }

  auto verdict = rk::positivity_check(*kernel, points, tolerance, symmetrize);
  nlohmann::json j = {{"verdict", verdict.positive_on_sample ? "positive_on_sample" : "violation"},
                      {"min_eigenvalue", verdict.min_eigenvalue},
                      {"threshold", verdict.threshold}};
  if (!verdict.positive_on_sample) {
    nlohmann::json witness = nlohmann::json::array();
    for (const auto& p : verdict.witness_points)
      witness.push_back(p.size() == 1 ? nlohmann::json(p(0))
                                      : nlohmann::json(std::vector<double>(
                                            p.data(), p.data() + p.size())));
    j["witness"] = witness;
    j["witness_coefficients"] = std::vector<double>(
        verdict.witness_coefficients.data(),
        verdict.witness_coefficients.data() + verdict.witness_coefficients.size());
  }
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    rk::write_json_file(out_path, j);
  }
  return verdict.positive_on_sample ? kExitOk : kExitViolation;
}

int cmd_fit(const std::string& solver, const std::string& spec_path, const std::string& data_path,
            double lambda, double p, unsigned seed, const std::string& out_path,
            const std::string& query_path, const std::string& predictions_path, int resolution) {
  auto data = rk::read_dataset_csv(data_path);
  rk::FitConfig config;
  config.lambda = lambda;
  config.p = p;
  config.seed = seed;

  rk::FitResult result;
  if (solver == "krr") {
    auto kernel = spec_path.empty() ? rk::closed_form_kernel("min")
                                    : load_kernel(spec_path, resolution);
    result = rk::fit_krr(kernel, data, config);
  } else if (solver == "pnorm") {
    result = rk::fit_pnorm(data, config);
  } else {
    throw CLI::ValidationError("--solver must be krr or pnorm");
  }

  rk::write_json_file(out_path, rk::fit_result_to_json(result));

  if (!query_path.empty()) {
    auto queries = rk::read_points_csv(query_path);
    auto out = open_out(predictions_path.empty() ? out_path + ".predictions.csv"
                                                 : predictions_path);
    out << "x,prediction\n";
    for (const auto& q : queries) {
      for (Eigen::Index k = 0; k < q.size(); ++k)
        out << (k ? ";" : "") << rk::format_number(q(k));
      out << "," << rk::format_number(rk::evaluate(result.model, q)) << "\n";
    }
  }
  return result.diagnostics.converged ? kExitOk : kExitNoConvergence;
}

int cmd_verify(unsigned seed, const std::string& only, const std::string& out_path) {
  auto reports = rk::run_verify_suite(seed, only);
  for (const auto& r : reports)
    std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name
              << "  measured=" << rk::format_number(r.measured)
              << "  tolerance=" << rk::format_number(r.tolerance) << "\n";
  if (!out_path.empty()) rk::write_json_file(out_path, rk::reports_to_json(reports));
  return rk::all_pass(reports) ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reproducing-kernel toolkit"};
  app.require_subcommand(1);

  std::string spec, data, points, pairs, out, pred_out, query, only, solver = "krr";
  double lambda = 1e-3, p = 2.0, tolerance = 1e-10;
  int grid = 0, sample = 8, resolution = 0;
  unsigned seed = 0;
  bool symmetrize = false;

  auto* eval = app.add_subcommand("kernel-eval", "evaluate K on pairs or a grid");
  eval->add_option("--spec", spec, "kernel spec JSON")->required();
  eval->add_option("--pairs", pairs, "CSV of (x, y) pairs");
  eval->add_option("--grid", grid, "evaluate on an N x N grid over the domain");
  eval->add_option("--out", out, "output CSV")->required();
  eval->add_option("--resolution", resolution, "override quadrature resolution");

  auto* gram_cmd = app.add_subcommand("gram", "export a Gram matrix as CSV");
  gram_cmd->add_option("--spec", spec)->required();
  gram_cmd->add_option("--points", points, "points CSV")->required();
  gram_cmd->add_option("--out", out)->required();
  gram_cmd->add_option("--resolution", resolution);

  auto* psd = app.add_subcommand("check-psd", "positivity verdict on a point sample");
  psd->add_option("--spec", spec)->required();
  psd->add_option("--points", points, "points CSV (otherwise sampled)");
  psd->add_option("--sample", sample, "sample size when --points absent");
  psd->add_option("--seed", seed);
  psd->add_option("--tolerance", tolerance);
  psd->add_flag("--symmetrize", symmetrize, "test (K + K^T)/2 for asymmetric kernels");
  psd->add_option("--out", out, "verdict JSON (stdout when absent)");
  psd->add_option("--resolution", resolution);

  auto* fit = app.add_subcommand("fit", "regularized fit (krr or pnorm)");
  fit->add_option("--solver", solver, "krr | pnorm");
  fit->add_option("--spec", spec, "kernel spec JSON (krr; default min kernel)");
  fit->add_option("--data", data, "dataset CSV (x[,x2,...],y)")->required();
  fit->add_option("--lambda", lambda, "regularization weight");
  fit->add_option("--p", p, "norm exponent (pnorm)");
  fit->add_option("--seed", seed);
  fit->add_option("--out", out, "fit result JSON")->required();
  fit->add_option("--query", query, "query points CSV for predictions");
  fit->add_option("--predictions", pred_out, "prediction CSV path");
  fit->add_option("--resolution", resolution);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--seed", seed);
  verify->add_option("--only", only, "table1 | basis_roundtrip | positivity | subduality");
  verify->add_option("--out", out, "report JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_kernel_eval(spec, pairs, grid, out, resolution);
    if (gram_cmd->parsed()) return cmd_gram(spec, points, out, resolution);
    if (psd->parsed())
      return cmd_check_psd(spec, points, sample, seed, tolerance, symmetrize, out, resolution);
    if (fit->parsed())
      return cmd_fit(solver, spec, data, lambda, p, seed, out, query, pred_out, resolution);
    if (verify->parsed()) return cmd_verify(seed, only, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
