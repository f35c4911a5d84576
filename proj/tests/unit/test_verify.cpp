#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fockbench/verify/commands.hpp"
#include "fockbench/verify/config.hpp"
#include "fockbench/verify/json_io.hpp"
#include "fockbench/verify/suites.hpp"

using namespace fock;
using namespace fock::verify;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("fockbench_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path write_spec(const fs::path& dir, const std::string& name, const json& spec) {
  const fs::path p = dir / (name + ".json");
  write_json_file(spec, p);
  return p;
}

std::vector<std::vector<double>> read_csv(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "re,im,value_re,value_im");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

// ---------------------------------------------------------------- config

TEST(Config, DefaultsValidate) {
  const RunConfig c = RunConfig::defaults();
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.truncation, 48);
  EXPECT_DOUBLE_EQ(c.tol("weyl-toeplitz/berezin"), 1e-6);
  EXPECT_THROW(c.tol("weyl-toeplitz/nonsense"), ConfigError);
  for (const auto& [k, v] : RunConfig::default_tolerances()) EXPECT_GE(v, 100 * 2.220446049250313e-16) << k;
}

TEST(Config, SizesCappedByTruncation) {
  RunConfig c = RunConfig::defaults();
  c.truncation = 10;
  EXPECT_EQ(c.n_mid(), 10);
  EXPECT_EQ(c.n_composition(), 10);
  EXPECT_EQ(c.n_small(), 10);
}

TEST(Config, Rejections) {
  EXPECT_THROW(parse_config(R"({"truncation": 0})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"truncation": 300})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"mystery": 1})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"ladder_radii": [4, 2]})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"tolerances": {"weyl-toeplitz/berezin": 1e-20}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"tolerances": {"nosuite/x": 1e-3}})"), ConfigError);
  EXPECT_THROW(parse_config("{not json"), ConfigError);
}

TEST(Config, RoundTripAndHash) {
  const RunConfig a = parse_config(R"({"truncation": 32, "tolerances": {"hausdorff-norm/norm": 1e-9}})");
  EXPECT_EQ(a.truncation, 32);
  EXPECT_DOUBLE_EQ(a.tol("hausdorff-norm/norm"), 1e-9);
  const RunConfig b = config_from_json(config_to_json(a));
  EXPECT_EQ(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16u);
  EXPECT_NE(config_hash(a), config_hash(RunConfig::defaults()));
  RunConfig c = a;
  c.output_dir = "elsewhere";
  EXPECT_EQ(config_hash(a), config_hash(c));
}

// ---------------------------------------------------------------- spec documents

TEST(SpecJson, EveryClassRoundTrips) {
  const int N = 10;
  const std::vector<json> specs{
      {{"class", "toeplitz"}, {"params", {{"symbol", {{"family", "angular"}, {"power", 2}}}}}},
      {{"class", "weyl"}, {"params", {{"z", {0.5, -0.2}}}}},
      {{"class", "weighted-composition"},
       {"params", {{"psi", {{"family", "kernel-multiple"}, {"c", 1.0}, {"b", {0.1, 0.2}}}}, {"a", 0.3}, {"lambda", 0.5}}}},
      {{"class", "singular-integral"},
       {"params", {{"m", {{"family", "step"}, {"lo", -1.0}, {"hi", 1.0}}}, {"method", "direct"}}}},
      {{"class", "volterra"},
       {"params", {{"gprime", {{"family", "polynomial"}, {"coeffs", {0.0, 1.0}}}}, {"a", 0.0}, {"lambda", 1.0}}}},
      {{"class", "toeplitz-type"},
       {"params", {{"symbol", {{"family", "gaussian-radial"}, {"c", 0.5}}}, {"j", 1}}}},
      {{"class", "hausdorff"},
       {"params", {{"rho", {{"atoms", {{{"at", 2.0}, {"weight", 1.0}}, {{"at", 3.0}, {"weight", 1.0}}}}}}}}},
      {{"class", "shift"}, {"params", {{"k", 2}}}},
      {{"class", "parity"}, {"params", json::object()}},
      {{"class", "identity"}, {"params", json::object()}},
      {{"class", "adjoint"}, {"params", {{"of", {{"class", "weyl"}, {"params", {{"z", 1.0}}}}}}}},
      {{"class", "product"},
       {"params", {{"factors", {{{"class", "parity"}, {"params", json::object()}},
                                {{"class", "weyl"}, {"params", {{"z", {0.0, 1.0}}}}}}}}}},
      {{"class", "sum"},
       {"params", {{"terms", {{{"coef", 2.0}, {"op", {{"class", "identity"}, {"params", json::object()}}}},
                              {{"coef", {0.0, -1.0}}, {"op", {{"class", "shift"}, {"params", {{"k", 1}}}}}}}}}}},
  };
  for (const auto& j : specs) {
    const OperatorSpec s = operator_spec_from_json(j);
    EXPECT_EQ(s.class_name(), j["class"].get<std::string>());
    const OperatorSpec back = operator_spec_from_json(operator_spec_to_json(s));
    EXPECT_EQ(back.class_name(), s.class_name());
    EXPECT_EQ(build_operator(s, N).entries(), build_operator(back, N).entries()) << j.dump();
  }
}

TEST(SpecJson, SymbolFamiliesRoundTrip) {
  const std::vector<SymbolSpec> symbols{
      SymbolSpec::constant({0.5, 1.0}),
      SymbolSpec::radial_gaussian_sum({{1.0, 0.5}, {{0.0, 2.0}, 1.5}}),
      SymbolSpec::radial_power(0, 2.0),
      SymbolSpec::radial_disc(1.2, 1.0, -1.0),
      SymbolSpec::plane_wave({0.3, 0.4}),
      SymbolSpec::vertical(LineProfile::step(0.0, 1.0, 0.2).blurred(0.25).shifted(0.1), 1),
      SymbolSpec::grid(-1.0, -1.0, 0.5, 0.5, 2, 2, {1.0, 2.0, 3.0, 4.0}, 0.5),
      SymbolSpec::wco(AnalyticSpec::exp_linear_times_poly({1.0, 0.5}, 0.2), 0.1, 0.5),
      SymbolSpec::sum({{2.0, SymbolSpec::angular(1)}, {-1.0, SymbolSpec::gaussian_radial(1.0)}}),
  };
  for (const auto& f : symbols) {
    const SymbolSpec g = symbol_from_json(symbol_to_json(f));
    for (cplx z : {cplx(0.1, 0.2), cplx(-0.7, 0.4), cplx(1.1, -0.9)})
      EXPECT_NEAR(std::abs(f(z) - g(z)), 0.0, 1e-15) << f.describe();
  }
}

TEST(SpecJson, MeasureWithDensityRoundTrips) {
  const auto rho = MeasureSpec::power_density(1.0, -2.0, 1.0, 10.0).add_atom(2.0, 0.5);
  const auto back = measure_from_json(measure_to_json(rho));
  for (int n : {0, 3, 9}) EXPECT_NEAR(std::abs(rho.moment(n) - back.moment(n)), 0.0, 1e-14);
}

TEST(SpecJson, Malformed) {
  EXPECT_THROW(operator_spec_from_json(json{{"class", "nonsense"}, {"params", json::object()}}), SpecError);
  EXPECT_THROW(operator_spec_from_json(json{{"params", json::object()}}), SpecError);
  EXPECT_THROW(operator_spec_from_json(json{{"class", "weyl"}, {"params", {{"z", "one"}}}}), SpecError);
  EXPECT_THROW(complex_from_json(json::array({1.0})), SpecError);
  EXPECT_EQ(complex_from_json(json(2.5)), cplx(2.5));
}

TEST(MatrixJson, BitExactRoundTrip) {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> nd(0.0, 1e3);
  Eigen::MatrixXcd M(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) M(i, k) = cplx(nd(gen), nd(gen) * 1e-12);
  const TruncatedOperator A(M, "random", 1e-9);
  const fs::path p = scratch("matrix") / "m.json";
  write_matrix(A, p);
  const Eigen::MatrixXcd back = read_matrix(p);
  ASSERT_EQ(back.rows(), 7);
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) {
      EXPECT_EQ(back(i, k).real(), M(i, k).real());
      EXPECT_EQ(back(i, k).imag(), M(i, k).imag());
    }
  const json j = read_json_file(p);
  EXPECT_EQ(j["layout"], "row-major");
  EXPECT_EQ(j["dim"], 7);
  EXPECT_EQ(j["provenance"], "random");
  EXPECT_EQ(j["entries"][1][0].get<double>(), M(0, 1).real());
}

// ---------------------------------------------------------------- checks and results

TEST(Checks, Semantics) {
  EXPECT_EQ(make_check("a", 1.0, 1.0 + 1e-9, 1e-8).status, Status::Pass);
  EXPECT_EQ(make_check("a", 1.0, 1.1, 1e-8).status, Status::Fail);
  EXPECT_EQ(make_check("a", NAN, 0.0, 1.0).status, Status::Fail);
  EXPECT_EQ(make_check("a", 1.0, 1.0, 1e-8, true).status, Status::Flagged);
  EXPECT_EQ(make_check("a", 2.0, 1.0, 1e-8, true).status, Status::Fail);
  const Check b = bound_check("b", 0.9, 1.0, 1e-8);
  EXPECT_EQ(b.status, Status::Pass);
  EXPECT_EQ(b.measured, 0.0);
  const Check c = bound_check("c", 1.5, 1.0, 1e-8);
  EXPECT_EQ(c.status, Status::Fail);
  EXPECT_DOUBLE_EQ(c.measured, 0.5);
}

TEST(Checks, StatusLattice) {
  EXPECT_EQ(worst(Status::Pass, Status::Flagged), Status::Flagged);
  EXPECT_EQ(worst(Status::Fail, Status::Flagged), Status::Fail);
  EXPECT_EQ(exit_code(Status::Pass), 0);
  EXPECT_EQ(exit_code(Status::Fail), 1);
  EXPECT_EQ(exit_code(Status::Flagged), 2);
  EXPECT_EQ(status_from_string("flagged"), Status::Flagged);
  SuiteResult empty{"x", {}, 0.0, ""};
  EXPECT_EQ(empty.status(), Status::Fail);
}

TEST(Checks, ResultJsonKeepsNonFinite) {
  SuiteResult r{"weyl-toeplitz", {make_check("n", NAN, 0.0, 1.0), make_check("i", INFINITY, 0.0, 1.0)}, 0.5, "abc"};
  const SuiteResult back = suite_result_from_json(suite_result_to_json(r));
  EXPECT_TRUE(std::isnan(back.checks[0].measured));
  EXPECT_TRUE(std::isinf(back.checks[1].measured));
  EXPECT_EQ(back.status(), Status::Fail);
  for (const auto& c : suite_result_to_json(r)["checks"])
    for (const char* k : {"name", "status", "measured", "expected", "tolerance"}) EXPECT_TRUE(c.contains(k)) << k;
}

TEST(Suites, Registry) {
  EXPECT_EQ(suite_names().size(), 21u);
  for (const auto& s : suite_names()) {
    EXPECT_TRUE(is_suite(s));
    EXPECT_FALSE(suite_statement(s).empty());
  }
  EXPECT_FALSE(is_suite("all"));
}

// ---------------------------------------------------------------- commands in process

TEST(Commands, MatrixWeylVacuumEntry) {
  const auto dir = scratch("cmd_matrix");
  const auto spec = write_spec(dir, "weyl", {{"class", "weyl"}, {"params", {{"z", {1.0, 0.0}}}}});
  std::ostringstream log;
  ASSERT_EQ(cmd_matrix(spec, 8, dir / "out.json", log), kPass);
  const auto M = read_matrix(dir / "out.json");
  EXPECT_NEAR(M(0, 0).real(), std::exp(-0.5), 1e-15);
}

TEST(Commands, MatrixParityDiagonal) {
  const auto dir = scratch("cmd_parity");
  const auto spec = write_spec(dir, "parity", {{"class", "parity"}, {"params", json::object()}});
  std::ostringstream log;
  ASSERT_EQ(cmd_matrix(spec, 6, dir / "out.json", log), kPass);
  const auto M = read_matrix(dir / "out.json");
  for (int n = 0; n < 6; ++n) EXPECT_EQ(M(n, n), cplx(n % 2 ? -1.0 : 1.0));
}

TEST(Commands, MatrixPreconditionExitCode) {
  const auto dir = scratch("cmd_pre");
  const auto spec = write_spec(dir, "h", {{"class", "hausdorff"},
                                          {"params", {{"rho", {{"atoms", {{{"at", 0.5}, {"weight", 1.0}}}}}}}}});
  std::ostringstream log;
  EXPECT_EQ(cmd_matrix(spec, 8, dir / "out.json", log), kPrecondition);
  EXPECT_NE(log.str().find("rho((0, 1)) = 0"), std::string::npos) << log.str();
  EXPECT_FALSE(fs::exists(dir / "out.json"));
}

TEST(Commands, MatrixParseErrors) {
  const auto dir = scratch("cmd_parse");
  write_text_file("{broken", dir / "bad.json");
  std::ostringstream log;
  EXPECT_EQ(cmd_matrix(dir / "bad.json", 8, dir / "out.json", log), kParseError);
  const auto unknown = write_spec(dir, "u", {{"class", "mystery"}, {"params", json::object()}});
  EXPECT_EQ(cmd_matrix(unknown, 8, dir / "out.json", log), kParseError);
  EXPECT_EQ(cmd_matrix(dir / "missing.json", 8, dir / "out.json", log), kParseError);
}

TEST(Commands, BerezinGridIdentityAndWeyl) {
  const auto dir = scratch("cmd_grid");
  std::ostringstream log;
  GridRequest g;
  g.half_width = 1.0;
  g.resolution = 5;
  const auto id = write_spec(dir, "id", {{"class", "identity"}, {"params", json::object()}});
  ASSERT_EQ(cmd_berezin_grid(id, 48, g, dir / "id.csv", log), kPass);
  const auto rows = read_csv(dir / "id.csv");
  ASSERT_EQ(rows.size(), 25u);
  for (const auto& r : rows) {
    EXPECT_NEAR(r[2], 1.0, 1e-12);
    EXPECT_NEAR(r[3], 0.0, 1e-12);
  }
  const auto w = write_spec(dir, "w", {{"class", "weyl"}, {"params", {{"z", 1.0}}}});
  ASSERT_EQ(cmd_berezin_grid(w, 48, g, dir / "w.csv", log), kPass);
  for (const auto& r : read_csv(dir / "w.csv")) EXPECT_NEAR(std::hypot(r[2], r[3]), std::exp(-0.5), 1e-8);
}

TEST(Commands, BerezinGridSingularConstantAlongRealAxis) {
  const auto dir = scratch("cmd_grid_sing");
  std::ostringstream log;
  const auto s = write_spec(dir, "s", json::parse(R"({"class": "singular-integral",
      "params": {"m": {"family": "gaussian", "amp": 1.0, "center": 0.2, "width": 0.6}}})"));
  GridRequest g;
  g.half_width = 1.0;
  g.resolution = 5;
  ASSERT_EQ(cmd_berezin_grid(s, 48, g, dir / "s.csv", log), kPass);
  const auto rows = read_csv(dir / "s.csv");
  for (int i = 0; i < 5; ++i)
    for (int k = 1; k < 5; ++k) {
      EXPECT_NEAR(rows[i * 5 + k][2], rows[i * 5][2], 1e-6);
      EXPECT_NEAR(rows[i * 5 + k][3], rows[i * 5][3], 1e-6);
    }
}

TEST(Commands, BerezinGridRadiusGuard) {
  const auto dir = scratch("cmd_grid_radius");
  std::ostringstream log;
  const auto id = write_spec(dir, "id", {{"class", "identity"}, {"params", json::object()}});
  GridRequest g;
  g.center = cplx(3.0, 0.0);
  g.half_width = 1.0;
  g.resolution = 3;
  EXPECT_EQ(cmd_berezin_grid(id, 16, g, dir / "a.csv", log), kRadiusExceeded);
  EXPECT_FALSE(fs::exists(dir / "a.csv"));
  g.force = true;
  EXPECT_EQ(cmd_berezin_grid(id, 16, g, dir / "a.csv", log), kFlagged);
  EXPECT_TRUE(fs::exists(dir / "a.csv"));
}

TEST(Commands, BerezinGridBivariateSlice) {
  const auto dir = scratch("cmd_grid_bi");
  std::ostringstream log;
  const auto id = write_spec(dir, "id", {{"class", "identity"}, {"params", json::object()}});
  GridRequest g;
  g.half_width = 0.5;
  g.resolution = 3;
  g.bivariate_w = cplx(0.3, -0.1);
  ASSERT_EQ(cmd_berezin_grid(id, 48, g, dir / "b.csv", log), kPass);
  for (const auto& r : read_csv(dir / "b.csv")) {
    // <k_w, k_z> = e^{-(|w|^2+|z|^2)/2 + z conj w}
    const cplx z(r[0], r[1]), w = *g.bivariate_w;
    const cplx want = std::exp(-0.5 * (std::norm(w) + std::norm(z)) + z * std::conj(w));
    EXPECT_NEAR(std::abs(cplx(r[2], r[3]) - want), 0.0, 1e-12);
  }
}

TEST(Commands, Spectrum) {
  const auto dir = scratch("cmd_spectrum");
  std::ostringstream log;
  const auto h = write_spec(dir, "h", {{"class", "hausdorff"},
                                       {"params", {{"rho", {{"atoms", {{{"at", 2.0}, {"weight", 1.0}}}}}}}}});
  ASSERT_EQ(cmd_spectrum(h, 8, dir / "h.json", log), kPass);
  const json jh = read_json_file(dir / "h.json");
  EXPECT_TRUE(jh["normal"].get<bool>());
  for (int n = 0; n < 8; ++n) {
    EXPECT_NEAR(jh["eigenvalues"][n][0].get<double>(), std::ldexp(1.0, -(n + 1)), 1e-15);
    EXPECT_NEAR(jh["singular_values"][n].get<double>(), std::ldexp(1.0, -(n + 1)), 1e-15);
  }

  const json T = {{"class", "toeplitz"}, {"params", {{"symbol", {{"family", "angular"}, {"power", 2}}}}}};
  const auto tt = write_spec(dir, "tt", {{"class", "product"},
                                         {"params", {{"factors", {{{"class", "adjoint"}, {"params", {{"of", T}}}}, T}}}}});
  ASSERT_EQ(cmd_spectrum(tt, 10, dir / "tt.json", log), kPass);
  const json jt = read_json_file(dir / "tt.json");
  ASSERT_TRUE(jt["normal"].get<bool>());
  // (n+1)/(n+2) on the leading block, descending, then the two zeros
  std::vector<double> want;
  for (int n = 0; n < 8; ++n) want.push_back((n + 1.0) / (n + 2.0));
  std::sort(want.rbegin(), want.rend());
  for (int n = 0; n < 8; ++n) EXPECT_NEAR(jt["eigenvalues"][n][0].get<double>(), want[n], 1e-12);
  EXPECT_NEAR(jt["eigenvalues"][8][0].get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(jt["eigenvalues"][9][0].get<double>(), 0.0, 1e-12);

  const auto z = write_spec(dir, "z", json::parse(R"({"class": "sum",
      "params": {"terms": [{"coef": 0.0, "op": {"class": "identity", "params": {}}}]}})"));
  ASSERT_EQ(cmd_spectrum(z, 4, dir / "z.json", log), kPass);
  for (const auto& v : read_json_file(dir / "z.json")["singular_values"]) EXPECT_EQ(v.get<double>(), 0.0);
}

TEST(Commands, ReportStates) {
  std::ostringstream log;
  const auto empty = scratch("report_empty");
  EXPECT_EQ(cmd_report(empty, empty / "report.json", log), kEmptyResults);

  const auto dir = scratch("report");
  SuiteResult pass{"hausdorff-norm", {make_check("x", 1.0, 1.0, 1e-9)}, 0.1, "h"};
  write_json_file(suite_result_to_json(pass), dir / "hausdorff-norm.json");
  EXPECT_EQ(cmd_report(dir, dir / "report.json", log), kPass);
  EXPECT_EQ(read_json_file(dir / "report.json")["overall"], "pass");

  SuiteResult fail{"weyl-toeplitz", {make_check("x", 1.0, 2.0, 1e-9)}, 0.1, "h"};
  write_json_file(suite_result_to_json(fail), dir / "weyl-toeplitz.json");
  EXPECT_EQ(cmd_report(dir, dir / "report.json", log), kFail);
  EXPECT_EQ(read_json_file(dir / "report.json")["overall"], "fail");

  const auto corrupt = scratch("report_corrupt");
  write_json_file(suite_result_to_json(pass), corrupt / "hausdorff-norm.json");
  write_text_file("{\"suite\": ", corrupt / "broken.json");
  EXPECT_EQ(cmd_report(corrupt, corrupt / "report.json", log), kFlagged);
  const json rep = read_json_file(corrupt / "report.json");
  bool saw = false;
  for (const auto& row : rep["suites"]) saw |= row["status"] == "unreadable";
  EXPECT_TRUE(saw);
}

TEST(Commands, VerifyUnknownSuite) {
  std::ostringstream log;
  RunConfig cfg = RunConfig::defaults();
  cfg.output_dir = scratch("verify_unknown").string();
  EXPECT_EQ(cmd_verify("no-such-suite", cfg, log), kUnknownSuite);
}

TEST(Commands, VerifyIsDeterministic) {
  RunConfig cfg = RunConfig::defaults();
  cfg.truncation = 16;
  std::ostringstream log;
  auto run = [&](const std::string& tag) {
    cfg.output_dir = scratch(tag).string();
    EXPECT_EQ(cmd_verify("distance-bound", cfg, log), kPass) << log.str();
    json j = read_json_file(fs::path(cfg.output_dir) / "distance-bound.json");
    j.erase("wall_time");
    return j.dump();
  };
  EXPECT_EQ(run("det_a"), run("det_b"));
}

TEST(Commands, VerifyAllAtSmallTruncation) {
  RunConfig cfg = RunConfig::defaults();
  cfg.truncation = 8;
  cfg.output_dir = scratch("verify_all_small").string();
  std::ostringstream log;
  const int code = cmd_verify("all", cfg, log);
  EXPECT_NE(code, kUnknownSuite);
  size_t files = 0;
  for (const auto& e : fs::directory_iterator(cfg.output_dir)) {
    ++files;
    const SuiteResult r = suite_result_from_json(read_json_file(e.path()));
    EXPECT_FALSE(r.checks.empty()) << r.suite;
    EXPECT_EQ(r.config_hash, config_hash(cfg));
  }
  EXPECT_EQ(files, suite_names().size());
}

TEST(Commands, ResolveConfigPrecedence) {
  const auto dir = scratch("resolve");
  write_text_file(R"({"truncation": 20})", dir / "a.json");
  write_text_file(R"({"truncation": 30})", dir / "b.json");
  ::setenv("FOCKBENCH_CONFIG", (dir / "b.json").c_str(), 1);
  EXPECT_EQ(resolve_config(dir / "a.json").truncation, 20);
  EXPECT_EQ(resolve_config(std::nullopt).truncation, 30);
  ::unsetenv("FOCKBENCH_CONFIG");
  EXPECT_EQ(resolve_config(std::nullopt).truncation, 48);
}
