#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fockbench/analysis.hpp"
#include "fockbench/quadrature.hpp"

namespace fock::verify {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int truncation = 48;              // general suites
  int mid_truncation = 24;          // WCO symbol, Volterra identities
  int composition_truncation = 32;  // bivariate kernels
  int small_truncation = 12;        // double-quadrature suites
  int radial_nodes = 200;
  int angular_nodes = 256;
  int line_nodes = 200;
  std::vector<double> ladder_radii{2.0, 4.0, 6.0, 8.0};
  int ladder_angles = 64;
  std::map<std::string, double> tolerances;  // "suite/check" -> tolerance
  std::string output_dir = "results";
  std::uint64_t seed = 1729;
  double jitter = 1e-3;  // amplitude of the sample-point perturbation

  static RunConfig defaults();
  static const std::map<std::string, double>& default_tolerances();

  double tol(const std::string& key) const;
  void validate() const;

  // Sizes actually used: never larger than the general truncation.
  int n() const { return truncation; }
  int n_mid() const;
  int n_composition() const;
  int n_small() const;
  QuadratureRule planar_rule() const;
  RadiusLadder ladder() const;
};

RunConfig config_from_json(const nlohmann::json& j);
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json config_to_json(const RunConfig& cfg);
// FNV-1a of the canonical JSON dump, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

}  // namespace fock::verify
