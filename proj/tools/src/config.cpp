#include "fockbench/verify/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace fock::verify {

using nlohmann::json;

const std::map<std::string, double>& RunConfig::default_tolerances() {
  static const std::map<std::string, double> t{
      {"weyl-toeplitz/berezin", 1e-6},
      {"weyl-toeplitz/closed-form", 1e-8},
      {"berezin-heat/heat", 1e-6},
      {"berezin-heat/closed-form", 1e-6},
      {"composition-kernel/identity", 1e-6},
      {"wco-symbol/norm", 1e-5},
      {"wco-berezin/closed-form", 1e-7},
      {"distance-bound/threshold", 0.1},
      {"distance-bound/slack", 1e-9},
      {"distance-bound/compact", 1e-6},
      {"distance-bound/value", 1e-6},
      {"volterra-matrix/entries", 1e-10},
      {"volterra-matrix/toeplitz", 1e-8},
      {"volterra-berezin/series", 1e-6},
      {"volterra-decomposition/identity", 1e-6},
      {"index-volterra/threshold", 1e-6},
      {"index-volterra/index", 0.5},
      {"singular-multiplier/cross", 1e-5},
      {"singular-multiplier/self-adjoint", 1e-8},
      {"singular-multiplier/norm", 2e-3},
      {"singular-multiplier/monotone", 1e-12},
      {"singular-berezin/phi", 1e-5},
      {"singular-berezin/kernel", 1e-5},
      {"singular-shift/lemma", 1e-5},
      {"singular-vertical-toeplitz/berezin", 1e-5},
      {"toeplitztype-convolution/operator", 1e-6},
      {"toeplitztype-convolution/gj", 1e-8},
      {"laguerre-fourier-weyl/trace", 1e-7},
      {"hausdorff-eigen/moments", 1e-10},
      {"hausdorff-norm/norm", 1e-10},
      {"hausdorff-decay/closed-form", 1e-8},
      {"hausdorff-decay/oscillation", 1e-6},
      {"localization-wiener/domination", 1e-10},
      {"bargmann-basis/basis", 1e-8},
      {"bargmann-basis/orthonormal", 1e-10},
  };
  return t;
}

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.tolerances = default_tolerances();
  return c;
}

double RunConfig::tol(const std::string& key) const {
  auto it = tolerances.find(key);
  if (it != tolerances.end()) return it->second;
  auto d = default_tolerances().find(key);
  if (d == default_tolerances().end()) throw ConfigError("no tolerance named " + key);
  return d->second;
}

int RunConfig::n_mid() const { return std::min(mid_truncation, truncation); }
int RunConfig::n_composition() const { return std::min(composition_truncation, truncation); }
int RunConfig::n_small() const { return std::min(small_truncation, truncation); }

QuadratureRule RunConfig::planar_rule() const {
  if (radial_nodes == 200 && angular_nodes == 256) return default_planar_rule();
  return make_rule(RuleKind::PlanarPolar, {radial_nodes, angular_nodes});
}

RadiusLadder RunConfig::ladder() const {
  RadiusLadder l;
  l.radii = ladder_radii;
  l.n_angles = ladder_angles;
  return l;
}

void RunConfig::validate() const {
  auto positive = [](double v, const char* what) {
    if (!(v > 0) || !std::isfinite(v)) throw ConfigError(std::string(what) + " must be positive");
  };
  positive(truncation, "truncation");
  positive(mid_truncation, "mid_truncation");
  positive(composition_truncation, "composition_truncation");
  positive(small_truncation, "small_truncation");
  positive(radial_nodes, "quadrature.radial");
  positive(angular_nodes, "quadrature.angular");
  positive(line_nodes, "quadrature.line");
  positive(ladder_angles, "ladder.angles");
  positive(jitter, "jitter");
  if (truncation > 256) throw ConfigError("truncation must be at most 256");
  if (ladder_radii.size() < 2) throw ConfigError("ladder needs at least two radii");
  for (std::size_t i = 0; i < ladder_radii.size(); ++i) {
    positive(ladder_radii[i], "ladder radius");
    if (i > 0 && ladder_radii[i] <= ladder_radii[i - 1])
      throw ConfigError("ladder radii must increase");
  }
  const double floor = 100 * std::numeric_limits<double>::epsilon();
  for (const auto& [k, v] : tolerances) {
    if (!default_tolerances().count(k)) throw ConfigError("unknown tolerance " + k);
    if (!(v >= floor) || !std::isfinite(v))
      throw ConfigError("tolerance " + k + " must be at least 100 machine epsilon");
  }
}

namespace {

template <class T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be an object");
  static const char* known[] = {"truncation",   "mid_truncation", "composition_truncation",
                                "small_truncation", "quadrature", "ladder",
                                "tolerances",   "output_dir",     "seed",
                                "jitter"};
  for (const auto& [k, v] : j.items()) {
    if (std::find_if(std::begin(known), std::end(known), [&](const char* s) { return k == s; }) ==
        std::end(known))
      throw ConfigError("unknown config key " + k);
  }
  RunConfig c = RunConfig::defaults();
  try {
    read(j, "truncation", c.truncation);
    read(j, "mid_truncation", c.mid_truncation);
    read(j, "composition_truncation", c.composition_truncation);
    read(j, "small_truncation", c.small_truncation);
    if (j.contains("quadrature")) {
      const auto& q = j.at("quadrature");
      read(q, "radial", c.radial_nodes);
      read(q, "angular", c.angular_nodes);
      read(q, "line", c.line_nodes);
    }
    if (j.contains("ladder")) {
      const auto& l = j.at("ladder");
      read(l, "radii", c.ladder_radii);
      read(l, "angles", c.ladder_angles);
    }
    if (j.contains("tolerances"))
      for (const auto& [k, v] : j.at("tolerances").items()) c.tolerances[k] = v.get<double>();
    read(j, "output_dir", c.output_dir);
    read(j, "seed", c.seed);
    read(j, "jitter", c.jitter);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

json config_to_json(const RunConfig& c) {
  json tol = json::object();
  for (const auto& [k, v] : RunConfig::default_tolerances()) tol[k] = c.tol(k);
  return json{{"truncation", c.truncation},
              {"mid_truncation", c.mid_truncation},
              {"composition_truncation", c.composition_truncation},
              {"small_truncation", c.small_truncation},
              {"quadrature", {{"radial", c.radial_nodes}, {"angular", c.angular_nodes}, {"line", c.line_nodes}}},
              {"ladder", {{"radii", c.ladder_radii}, {"angles", c.ladder_angles}}},
              {"tolerances", tol},
              {"output_dir", c.output_dir},
              {"seed", c.seed},
              {"jitter", c.jitter}};
}

std::string config_hash(const RunConfig& c) {
  json j = config_to_json(c);
  j.erase("output_dir");  // where results go does not change them
  const std::string s = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace fock::verify
