#include "fockbench/verify/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fockbench/fockbench.hpp"
#include "fockbench/verify/json_io.hpp"
#include "fockbench/verify/suites.hpp"

namespace fock::verify {

using nlohmann::json;
namespace fs = std::filesystem;

RunConfig resolve_config(const std::optional<fs::path>& path) {
  if (path) return load_config(*path);
  if (const char* env = std::getenv("FOCKBENCH_CONFIG"); env && *env) return load_config(env);
  return RunConfig::defaults();
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& log) {
  if (suite != "all" && !is_suite(suite)) {
    log << "unknown suite: " << suite << "\n";
    return kUnknownSuite;
  }
  const std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  Status overall = Status::Pass;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, cfg);
    write_json_file(suite_result_to_json(r), fs::path(cfg.output_dir) / (name + ".json"));
    log << to_string(r.status()) << "  " << name << "  (" << r.checks.size() << " checks, " << r.wall_time
        << " s)\n";
    for (const auto& c : r.checks)
      if (c.status != Status::Pass)
        log << "    " << to_string(c.status) << ": " << c.name << "  measured " << c.measured << " expected "
            << c.expected << " tol " << c.tolerance << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    overall = worst(overall, r.status());
  }
  return exit_code(overall);
}

namespace {

// Parse/precondition failures shared by the spec-driven subcommands.
template <class F>
int guarded(std::ostream& log, F&& body) {
  try {
    return body();
  } catch (const SpecError& e) {
    log << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const json::exception& e) {
    log << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const PreconditionError& e) {
    log << "precondition violated: " << e.condition() << "\n  " << e.what() << "\n";
    return kPrecondition;
  }
}

}  // namespace

int cmd_matrix(const fs::path& spec_file, int N, const fs::path& out, std::ostream& log) {
  return guarded(log, [&] {
    const OperatorSpec spec = load_operator_spec(spec_file);
    const TruncatedOperator A = build_operator(spec, N);
    write_matrix(A, out);
    log << "wrote " << A.dim() << "x" << A.dim() << " " << spec.class_name() << " matrix to " << out.string() << "\n";
    return kPass;
  });
}

int cmd_berezin_grid(const fs::path& spec_file, int N, const GridRequest& g, const fs::path& out, std::ostream& log) {
  return guarded(log, [&]() -> int {
    const OperatorSpec spec = load_operator_spec(spec_file);
    if (g.resolution < 1 || !(g.half_width >= 0)) throw PreconditionError("resolution >= 1, half-width >= 0", "");
    const double R = reliable_radius(N);
    const double reach = std::abs(g.center) + g.half_width * std::sqrt(2.0);
    const double w_reach = g.bivariate_w ? std::abs(*g.bivariate_w) : 0.0;
    if ((reach > R || w_reach > R) && !g.force) {
      log << "grid reaches |z| = " << std::max(reach, w_reach) << " beyond the reliable radius " << R
          << " for N = " << N << " (use --force)\n";
      return kRadiusExceeded;
    }
    const TruncatedOperator A = build_operator(spec, N);
    GridFunction f;
    const int n = g.resolution;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const double x = n == 1 ? 0.0 : -g.half_width + 2.0 * g.half_width * k / (n - 1);
        const double y = n == 1 ? 0.0 : -g.half_width + 2.0 * g.half_width * i / (n - 1);
        const cplx z = g.center + cplx(x, y);
        const auto v = g.bivariate_w ? bivariate_berezin(A, *g.bivariate_w, z) : berezin(A, z);
        f.points.push_back(z);
        f.values.push_back(v.value);
        f.flagged.push_back(v.flagged);
      }
    write_text_file(grid_to_csv(f), out);
    const auto nflag = std::count(f.flagged.begin(), f.flagged.end(), true);
    log << "wrote " << f.points.size() << " samples to " << out.string();
    if (nflag) log << " (" << nflag << " beyond the reliable radius)";
    log << "\n";
    return nflag ? kFlagged : kPass;
  });
}

int cmd_spectrum(const fs::path& spec_file, int N, const fs::path& out, std::ostream& log) {
  return guarded(log, [&] {
    const OperatorSpec spec = load_operator_spec(spec_file);
    const TruncatedOperator A = build_operator(spec, N);
    const Eigen::VectorXd sv = singular_values(A);  // already descending
    json j{{"dim", A.dim()}, {"class", spec.class_name()}, {"singular_values", std::vector<double>(sv.data(), sv.data() + sv.size())}};
    const Eigen::MatrixXcd& M = A.entries();
    const double scale = std::max(1.0, sv.size() ? sv(0) * sv(0) : 0.0);
    const bool normal = (M * M.adjoint() - M.adjoint() * M).cwiseAbs().maxCoeff() <= 1e-10 * scale;
    j["normal"] = normal;
    if (normal) {
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
      std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
      std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
      });
      json e = json::array();
      for (cplx z : ev) e.push_back(complex_to_json(z));
      j["eigenvalues"] = e;
    }
    write_json_file(j, out);
    log << "wrote spectrum of " << spec.class_name() << " (N = " << N << (normal ? ", normal" : "") << ") to "
        << out.string() << "\n";
    return kPass;
  });
}

int cmd_report(const fs::path& dir, const fs::path& out, std::ostream& log) {
  std::vector<fs::path> files;
  if (fs::is_directory(dir))
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".json" && fs::absolute(e.path()) != fs::absolute(out))
        files.push_back(e.path());
  if (files.empty()) {
    log << "no result files in " << dir.string() << "\n";
    return kEmptyResults;
  }
  std::sort(files.begin(), files.end());
  json rows = json::array();
  Status overall = Status::Pass;
  bool unreadable = false;
  std::ostringstream table;
  table << "| suite | statement | status | checks | failing |\n|---|---|---|---|---|\n";
  for (const auto& f : files) {
    json row{{"file", f.filename().string()}};
    try {
      const SuiteResult r = suite_result_from_json(read_json_file(f));
      const auto failing = std::count_if(r.checks.begin(), r.checks.end(),
                                         [](const Check& c) { return c.status != Status::Pass; });
      row["suite"] = r.suite;
      row["statement"] = suite_statement(r.suite);
      row["status"] = to_string(r.status());
      row["checks"] = r.checks.size();
      row["not_passing"] = failing;
      row["config_hash"] = r.config_hash;
      overall = worst(overall, r.status());
      table << "| " << r.suite << " | " << suite_statement(r.suite) << " | " << to_string(r.status()) << " | "
            << r.checks.size() << " | " << failing << " |\n";
    } catch (const std::exception& e) {
      unreadable = true;
      row["suite"] = f.stem().string();
      row["status"] = "unreadable";
      row["error"] = e.what();
      overall = worst(overall, Status::Flagged);
      table << "| " << f.stem().string() << " | | unreadable | | |\n";
    }
    rows.push_back(row);
  }
  const json summary{{"overall", to_string(overall)},
                     {"suites", rows},
                     {"table", table.str()}};
  write_json_file(summary, out);
  log << table.str();
  if (unreadable && overall != Status::Fail) return kFlagged;
  return exit_code(overall);
}

}  // namespace fock::verify
