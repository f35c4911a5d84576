#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fockbench/verify/config.hpp"

namespace fock::verify {

// Lattice order pass < flagged < fail.
enum class Status { Pass = 0, Flagged = 1, Fail = 2 };
const char* to_string(Status s);
Status status_from_string(const std::string& s);
Status worst(Status a, Status b);

struct Check {
  std::string name;
  Status status = Status::Pass;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

// pass iff |measured - expected| <= tolerance; a passing value computed
// outside the trusted region is downgraded to flagged.
Check make_check(std::string name, double measured, double expected, double tolerance, bool flagged = false,
                 std::string detail = {});
// One-sided: passes iff value <= bound + tolerance. Stores the excess over
// the bound as `measured` against expected 0.
Check bound_check(std::string name, double value, double bound, double tolerance, bool flagged = false,
                  std::string detail = {});

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  double wall_time = 0.0;
  std::string config_hash;
  Status status() const;
};

nlohmann::json suite_result_to_json(const SuiteResult& r);
SuiteResult suite_result_from_json(const nlohmann::json& j);
int exit_code(Status s);

// Names in the order "all" runs them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Human-readable statement each suite checks, for the report table.
std::string suite_statement(const std::string& name);

SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace fock::verify
