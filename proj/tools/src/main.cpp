#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fockbench/verify/commands.hpp"
#include "fockbench/verify/suites.hpp"

namespace fs = std::filesystem;
using namespace fock::verify;

namespace {

// "re,im" or "re".
std::optional<fock::cplx> parse_complex(const std::string& s) {
  std::istringstream in(s);
  double re = 0, im = 0;
  char comma = 0;
  if (!(in >> re)) return std::nullopt;
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) return std::nullopt;
  }
  return fock::cplx(re, im);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated Fock-space operators: verification suites, matrix and Berezin exports"};
  app.require_subcommand(1);

  std::optional<fs::path> config_path;
  std::optional<int> truncation;
  app.add_option("--config", config_path, "RunConfig JSON (falls back to $FOCKBENCH_CONFIG)");
  app.add_option("--truncation", truncation, "truncation size N")->check(CLI::PositiveNumber);

  std::string suite;
  std::optional<std::string> results_dir;
  auto* verify = app.add_subcommand("verify", "run a verification suite (or all)");
  verify->add_option("--suite,suite", suite, "suite name or all")->required();
  verify->add_option("--out", results_dir, "directory for SuiteResult files");
  verify->add_option("--config", config_path, "RunConfig JSON");
  verify->add_option("--truncation", truncation, "truncation size N")->check(CLI::PositiveNumber);

  fs::path spec_file, out;
  auto spec_command = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("spec", spec_file, "operator spec (JSON)")->required();
    c->add_option("--out", out, "output file")->required();
    c->add_option("--truncation", truncation, "truncation size N")->check(CLI::PositiveNumber);
    c->add_option("--config", config_path, "RunConfig JSON");
    return c;
  };
  auto* matrix = spec_command("matrix", "export the truncated matrix");
  auto* spectrum = spec_command("spectrum", "singular values and, for normal truncations, eigenvalues");
  auto* grid = spec_command("berezin-grid", "sample the Berezin transform on a square grid (CSV)");
  std::string center = "0,0";
  std::optional<std::string> slice;
  GridRequest req;
  grid->add_option("--center", center, "grid centre re,im");
  grid->add_option("--half-width", req.half_width, "half side length of the grid");
  grid->add_option("--resolution", req.resolution, "points per side")->check(CLI::PositiveNumber);
  grid->add_option("--slice-w", slice, "sample z -> A~(w, z) at this w instead of the diagonal");
  grid->add_flag("--force", req.force, "allow grids beyond the reliable radius");

  fs::path report_dir;
  auto* report = app.add_subcommand("report", "aggregate a directory of SuiteResult files");
  report->add_option("results", report_dir, "results directory")->required();
  report->add_option("--out", out, "summary file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUnknownSuite;
  }

  RunConfig cfg;
  try {
    cfg = resolve_config(config_path);
    if (truncation) cfg.truncation = *truncation;
    if (results_dir) cfg.output_dir = *results_dir;
    cfg.validate();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*verify) return cmd_verify(suite, cfg, std::cout);
    if (*matrix) return cmd_matrix(spec_file, cfg.truncation, out, std::cout);
    if (*spectrum) return cmd_spectrum(spec_file, cfg.truncation, out, std::cout);
    if (*grid) {
      const auto c = parse_complex(center);
      if (!c) {
        std::cerr << "bad --center " << center << "\n";
        return kUnknownSuite;
      }
      req.center = *c;
      if (slice) {
        req.bivariate_w = parse_complex(*slice);
        if (!req.bivariate_w) {
          std::cerr << "bad --slice-w " << *slice << "\n";
          return kUnknownSuite;
        }
      }
      return cmd_berezin_grid(spec_file, cfg.truncation, req, out, std::cout);
    }
    if (*report) return cmd_report(report_dir, out, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUnknownSuite;
}
