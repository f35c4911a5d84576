#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "fockbench/operator_spec.hpp"
#include "fockbench/transforms.hpp"

namespace fock::verify {

// Malformed operator spec or matrix document.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Complex numbers are [re, im]; plain numbers are accepted on input.
nlohmann::json complex_to_json(cplx z);
cplx complex_from_json(const nlohmann::json& j);

nlohmann::json line_profile_to_json(const LineProfile& m);
LineProfile line_profile_from_json(const nlohmann::json& j);
nlohmann::json analytic_to_json(const AnalyticSpec& f);
AnalyticSpec analytic_from_json(const nlohmann::json& j);
nlohmann::json symbol_to_json(const SymbolSpec& f);
SymbolSpec symbol_from_json(const nlohmann::json& j);
nlohmann::json measure_to_json(const MeasureSpec& rho);
MeasureSpec measure_from_json(const nlohmann::json& j);

// {"class": ..., "params": {...}}
nlohmann::json operator_spec_to_json(const OperatorSpec& spec);
OperatorSpec operator_spec_from_json(const nlohmann::json& j);
OperatorSpec load_operator_spec(const std::filesystem::path& path);

// {"dim", "layout": "row-major", "entries": [[re, im], ...], "provenance", "truncation_tail"}
nlohmann::json matrix_to_json(const TruncatedOperator& A);
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j);
void write_matrix(const TruncatedOperator& A, const std::filesystem::path& path);
Eigen::MatrixXcd read_matrix(const std::filesystem::path& path);

// CSV with header "re,im,value_re,value_im".
std::string grid_to_csv(const GridFunction& g);

nlohmann::json read_json_file(const std::filesystem::path& path);
// Pretty-printed with a trailing newline; parent directories are created.
void write_json_file(const nlohmann::json& j, const std::filesystem::path& path);
void write_text_file(const std::string& text, const std::filesystem::path& path);

}  // namespace fock::verify
