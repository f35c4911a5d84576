#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "fockbench/verify/config.hpp"

namespace fock::verify {

// Exit codes shared by every subcommand.
enum Exit : int {
  kPass = 0,
  kFail = 1,
  kFlagged = 2,
  kUnknownSuite = 64,  // also used for command-line usage errors
  kParseError = 65,
  kPrecondition = 66,
  kRadiusExceeded = 67,
  kEmptyResults = 68,
};

// Config from an explicit path, else $FOCKBENCH_CONFIG, else defaults.
RunConfig resolve_config(const std::optional<std::filesystem::path>& path);

// Writes <out>/<suite>.json for each suite run ("all" runs every suite).
int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& log);
int cmd_matrix(const std::filesystem::path& spec_file, int N, const std::filesystem::path& out, std::ostream& log);

struct GridRequest {
  cplx center = 0.0;
  double half_width = 1.0;
  int resolution = 21;
  std::optional<cplx> bivariate_w;  // slice z -> A~(w, z) instead of the diagonal
  bool force = false;
};
int cmd_berezin_grid(const std::filesystem::path& spec_file, int N, const GridRequest& grid,
                     const std::filesystem::path& out, std::ostream& log);
int cmd_spectrum(const std::filesystem::path& spec_file, int N, const std::filesystem::path& out, std::ostream& log);
int cmd_report(const std::filesystem::path& results_dir, const std::filesystem::path& out, std::ostream& log);

}  // namespace fock::verify
