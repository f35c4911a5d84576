#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>

#include "suite_context.hpp"

namespace fock::verify {

using nlohmann::json;

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Flagged: return "flagged";
    case Status::Fail: return "fail";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "flagged") return Status::Flagged;
  if (s == "fail") return Status::Fail;
  throw std::invalid_argument("unknown status " + s);
}

Status worst(Status a, Status b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Flagged: return 2;
  }
  return 1;
}

Check make_check(std::string name, double measured, double expected, double tolerance, bool flagged,
                 std::string detail) {
  Check c{std::move(name), Status::Pass, measured, expected, tolerance, std::move(detail)};
  const bool ok = std::abs(measured - expected) <= tolerance;  // NaN fails
  c.status = !ok ? Status::Fail : flagged ? Status::Flagged : Status::Pass;
  return c;
}

Check bound_check(std::string name, double value, double bound, double tolerance, bool flagged, std::string detail) {
  double excess = value - bound;
  if (excess < 0) excess = 0.0;
  if (std::isnan(value) || std::isnan(bound)) excess = std::nan("");
  return make_check(std::move(name), excess, 0.0, tolerance, flagged, std::move(detail));
}

Status SuiteResult::status() const {
  Status s = Status::Pass;
  for (const auto& c : checks) s = worst(s, c.status);
  if (checks.empty()) s = Status::Fail;
  return s;
}

namespace {

// JSON has no NaN/inf; keep them readable and reversible.
json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

double number_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  throw std::invalid_argument("not a number: " + s);
}

}  // namespace

json suite_result_to_json(const SuiteResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc{{"name", c.name},
            {"status", to_string(c.status)},
            {"measured", number(c.measured)},
            {"expected", number(c.expected)},
            {"tolerance", number(c.tolerance)}};
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  return json{{"suite", r.suite},
              {"status", to_string(r.status())},
              {"checks", checks},
              {"wall_time", r.wall_time},
              {"config_hash", r.config_hash}};
}

SuiteResult suite_result_from_json(const json& j) {
  SuiteResult r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("checks")) {
    Check k;
    k.name = c.at("name").get<std::string>();
    k.status = status_from_string(c.at("status").get<std::string>());
    k.measured = number_from(c.at("measured"));
    k.expected = number_from(c.at("expected"));
    k.tolerance = number_from(c.at("tolerance"));
    if (c.contains("detail")) k.detail = c.at("detail").get<std::string>();
    r.checks.push_back(std::move(k));
  }
  r.wall_time = j.at("wall_time").get<double>();
  r.config_hash = j.at("config_hash").get<std::string>();
  return r;
}

namespace {

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
  const char* statement;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> r{
      {"weyl-toeplitz", suite_weyl_toeplitz, "T_{g_z} = W_z (Berezin transforms agree)"},
      {"berezin-heat", suite_berezin_heat, "Berezin transform of T_f is the heat transform f * g_1"},
      {"composition-kernel", suite_composition_kernel, "(AB)~(w,z) = (1/pi) int B~(w,xi) A~(xi,z) d xi"},
      {"wco-symbol", suite_wco_symbol, "W_{psi,phi} = T_{f_{psi,phi}} for |lambda - 1/2| <= 1/2"},
      {"wco-berezin", suite_wco_berezin, "Berezin transform of W_{psi,phi} in closed form"},
      {"distance-bound", suite_distance_bound, "dist(W_{psi,phi}, T) >= limsup M_z / ||W|| for lambda = -1"},
      {"volterra-matrix", suite_volterra_matrix, "V_{z^2/2} = T_{(z/|z|)^2} with entries sqrt((n+1)/(n+2))"},
      {"volterra-berezin", suite_volterra_berezin, "Berezin transform of V_{(g,phi)} as a raising-operator series"},
      {"volterra-decomposition", suite_volterra_decomposition, "V_{(g,phi)} = g'(0) V_z W_{1,phi} + V_{z^2/2} W_{h,phi}"},
      {"index-volterra", suite_index_volterra, "ind V_{z^2/2} = -2"},
      {"singular-multiplier", suite_singular_multiplier, "S_phi = B F^{-1} M_m F B*, ||S_phi|| -> sup |m|"},
      {"singular-berezin", suite_singular_berezin, "S_phi~(z) = phi(2i Im z), kernel phi(z - conj w) e^{z conj w}"},
      {"singular-shift", suite_singular_shift, "alpha_v(S_phi) = S_{phi(. - 2i Im v)}"},
      {"singular-vertical-toeplitz", suite_singular_vertical_toeplitz, "S_phi with m = g * m0 is a vertical Toeplitz operator"},
      {"toeplitztype-convolution", suite_toeplitztype_convolution, "T_f^{(j)} = (1/pi) f * (e_j (x) e_j), (e_j (x) e_j) * (e_0 (x) e_0) = g_j"},
      {"laguerre-fourier-weyl", suite_laguerre_fourier_weyl, "tr((e_j (x) e_j) W_{-xi}) = e^{-|xi|^2/2} L_j(|xi|^2)"},
      {"hausdorff-eigen", suite_hausdorff_eigen, "H_rho is diagonal with the moments of rho; H_{delta_x} = T_{f_x}"},
      {"hausdorff-norm", suite_hausdorff_norm, "||H_rho|| = int (1/t) d rho for positive rho"},
      {"hausdorff-decay", suite_hausdorff_decay, "Berezin transform of H_{delta_x} and compactness diagnostics"},
      {"localization-wiener", suite_localization_wiener, "|A~(w,z)| dominated by an integrable profile of |z - w|"},
      {"bargmann-basis", suite_bargmann_basis, "B h_n = e_n"},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& e : registry())
    if (name == e.name) return true;
  return false;
}

std::string suite_statement(const std::string& name) {
  for (const auto& e : registry())
    if (name == e.name) return e.statement;
  return {};
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
  const SuiteEntry* entry = nullptr;
  for (const auto& e : registry())
    if (name == e.name) entry = &e;
  if (!entry) throw std::invalid_argument("unknown suite " + name);
  const auto t0 = std::chrono::steady_clock::now();
  SuiteContext ctx(cfg, name);
  try {
    entry->fn(ctx);
  } catch (const std::exception& e) {
    // A suite that throws has not verified anything.
    ctx.checks.push_back(Check{"completed", Status::Fail, 0.0, 1.0, 0.5, e.what()});
  }
  SuiteResult r;
  r.suite = name;
  r.checks = std::move(ctx.checks);
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.config_hash = config_hash(cfg);
  return r;
}

// ---------------------------------------------------------------- context

namespace {

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

SuiteContext::SuiteContext(const RunConfig& c, const std::string& suite)
    : cfg(c), suite_(suite), rng_(c.seed ^ fnv(suite)), planar_(c.planar_rule()) {}

void SuiteContext::check(std::string name, double measured, double expected, const std::string& tol_key,
                         bool flagged, std::string detail) {
  checks.push_back(make_check(std::move(name), measured, expected, tol(tol_key), flagged, std::move(detail)));
}

void SuiteContext::bound(std::string name, double value, double limit, const std::string& tol_key, bool flagged,
                         std::string detail) {
  checks.push_back(bound_check(std::move(name), value, limit, tol(tol_key), flagged, std::move(detail)));
}

cplx SuiteContext::jitter(cplx z) {
  std::uniform_real_distribution<double> u(-cfg.jitter, cfg.jitter);
  const double dx = u(rng_);
  const double dy = u(rng_);
  return z + cplx(dx, dy);
}

std::vector<cplx> SuiteContext::square_grid(cplx c, double h, int n) {
  std::vector<cplx> pts;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double x = n == 1 ? 0.0 : -h + 2.0 * h * k / (n - 1);
      const double y = n == 1 ? 0.0 : -h + 2.0 * h * i / (n - 1);
      pts.push_back(jitter(c + cplx(x, y)));
    }
  return pts;
}

void MaxError::take(double e, bool f, const std::string& at) {
  flagged = flagged || f;
  if (std::isnan(value)) return;  // a NaN stays the verdict
  if (std::isnan(e) || e > value) {
    value = e;
    where = at;
  }
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string fmt(cplx z) { return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i"; }

}  // namespace fock::verify
