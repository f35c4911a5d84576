#include "fockbench/verify/json_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace fock::verify {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw SpecError(std::string("field \"") + key + "\": " + e.what());
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? get<T>(j, key) : fallback;
}

cplx cget(const json& j, const char* key) { return complex_from_json(field(j, key)); }
cplx cget_or(const json& j, const char* key, cplx fallback) {
  return j.contains(key) ? cget(j, key) : fallback;
}

json clist(const std::vector<cplx>& v) {
  json out = json::array();
  for (cplx z : v) out.push_back(complex_to_json(z));
  return out;
}

std::vector<cplx> clist_from(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw SpecError(std::string("field \"") + key + "\" must be a list");
  std::vector<cplx> out;
  for (const auto& e : a) out.push_back(complex_from_json(e));
  return out;
}

std::string family_of(const json& j) { return get<std::string>(j, "family"); }

}  // namespace

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw SpecError("expected a number or [re, im], got " + j.dump());
}

// ---------------------------------------------------------------- line profiles

json line_profile_to_json(const LineProfile& m) {
  json j = std::visit(
      overloaded{
          [](const StepProfile& s) {
            return json{{"family", "step"}, {"lo", complex_to_json(s.lo)}, {"hi", complex_to_json(s.hi)}, {"x0", s.x0}};
          },
          [](const GaussianProfile& g) {
            return json{{"family", "gaussian"}, {"amp", complex_to_json(g.amp)}, {"center", g.center}, {"width", g.width}};
          },
          [](const CosineProfile& c) {
            return json{{"family", "cosine"}, {"offset", complex_to_json(c.offset)}, {"amp", complex_to_json(c.amp)},
                        {"freq", c.freq}, {"phase", c.phase}};
          },
          [](const GridProfile& g) { return json{{"family", "grid"}, {"xs", g.xs}, {"values", clist(g.values)}}; }},
      m.family());
  if (m.blur() != 0.0) j["blur"] = m.blur();
  if (m.sign() != 1) j["sign"] = m.sign();
  if (m.shift() != 0.0) j["shift"] = m.shift();
  return j;
}

LineProfile line_profile_from_json(const json& j) {
  const std::string fam = family_of(j);
  LineProfile base;
  if (fam == "step")
    base = LineProfile::step(cget_or(j, "lo", -1.0), cget_or(j, "hi", 1.0), get_or(j, "x0", 0.0));
  else if (fam == "gaussian")
    base = LineProfile::gaussian(cget_or(j, "amp", 1.0), get_or(j, "center", 0.0), get_or(j, "width", 1.0));
  else if (fam == "cosine")
    base = LineProfile::cosine(cget_or(j, "offset", 0.0), cget_or(j, "amp", 1.0), get_or(j, "freq", 1.0),
                               get_or(j, "phase", 0.0));
  else if (fam == "constant")
    base = LineProfile::constant(cget(j, "value"));
  else if (fam == "grid")
    base = LineProfile::grid(get<std::vector<double>>(j, "xs"), clist_from(j, "values"));
  else
    throw SpecError("unknown line profile family \"" + fam + "\"");
  // Stored form is m(x) = (base * blur)(sign x + shift).
  const double blur = get_or(j, "blur", 0.0);
  const int sign = get_or(j, "sign", 1);
  const double shift = get_or(j, "shift", 0.0);
  if (sign != 1 && sign != -1) throw SpecError("line profile sign must be +1 or -1");
  LineProfile m = blur != 0.0 ? base.blurred(blur) : base;
  if (sign < 0) m = m.mirrored();
  if (shift != 0.0) m = m.shifted(sign * shift);
  return m;
}

// ---------------------------------------------------------------- analytic functions

json analytic_to_json(const AnalyticSpec& f) {
  return std::visit(
      overloaded{[](const Polynomial& p) { return json{{"family", "polynomial"}, {"coeffs", clist(p.coeffs)}}; },
                 [](const KernelMultiple& k) {
                   return json{{"family", "kernel-multiple"}, {"c", complex_to_json(k.c)}, {"b", complex_to_json(k.b)}};
                 },
                 [](const ExpLinearTimesPoly& e) {
                   return json{{"family", "exp-linear-times-poly"}, {"coeffs", clist(e.coeffs)},
                               {"c", complex_to_json(e.c)}};
                 }},
      f.family());
}

AnalyticSpec analytic_from_json(const json& j) {
  const std::string fam = family_of(j);
  if (fam == "polynomial") return AnalyticSpec::polynomial(clist_from(j, "coeffs"));
  if (fam == "constant") return AnalyticSpec::constant(cget(j, "value"));
  if (fam == "kernel-multiple") return AnalyticSpec::kernel_multiple(cget_or(j, "c", 1.0), cget(j, "b"));
  if (fam == "exp-linear-times-poly")
    return AnalyticSpec::exp_linear_times_poly(clist_from(j, "coeffs"), cget(j, "c"));
  throw SpecError("unknown analytic family \"" + fam + "\"");
}

// ---------------------------------------------------------------- symbols

json symbol_to_json(const SymbolSpec& f) {
  return std::visit(
      overloaded{
          [](const RadialGaussianSum& s) {
            json terms = json::array();
            for (const auto& [amp, c] : s.terms) terms.push_back({{"amp", complex_to_json(amp)}, {"c", c}});
            return json{{"family", "radial-gaussian-sum"}, {"terms", terms}};
          },
          [](const RadialPower& p) {
            return json{{"family", "radial-power"}, {"amp", complex_to_json(p.amp)}, {"k", p.k}};
          },
          [](const RadialDisc& d) {
            return json{{"family", "radial-disc"}, {"radius", d.radius}, {"inside", complex_to_json(d.inside)},
                        {"outside", complex_to_json(d.outside)}};
          },
          [](const AngularSymbol& a) { return json{{"family", "angular"}, {"power", a.power}}; },
          [](const PlaneWaveSymbol& p) { return json{{"family", "plane-wave"}, {"z0", complex_to_json(p.z0)}}; },
          [](const VerticalSymbol& v) {
            return json{{"family", "vertical"}, {"m0", line_profile_to_json(v.m0)}, {"sign", v.sign}};
          },
          [](const GridSamplesSymbol& g) {
            return json{{"family", "grid"}, {"x0", g.x0}, {"y0", g.y0}, {"dx", g.dx}, {"dy", g.dy},
                        {"nx", g.nx}, {"ny", g.ny}, {"values", clist(g.values)},
                        {"outside", complex_to_json(g.outside)}};
          },
          [](const WcoSymbol& w) {
            return json{{"family", "wco"}, {"psi", analytic_to_json(w.psi)}, {"a", complex_to_json(w.a)},
                        {"lambda", complex_to_json(w.lambda)}};
          },
          [](const SymbolSum& s) {
            json terms = json::array();
            for (const auto& [c, g] : s.terms)
              terms.push_back({{"coef", complex_to_json(c)}, {"symbol", symbol_to_json(*g)}});
            return json{{"family", "sum"}, {"terms", terms}};
          }},
      f.family());
}

SymbolSpec symbol_from_json(const json& j) {
  const std::string fam = family_of(j);
  if (fam == "constant") return SymbolSpec::constant(cget(j, "value"));
  if (fam == "gaussian-radial") return SymbolSpec::gaussian_radial(get<double>(j, "c"), cget_or(j, "amp", 1.0));
  if (fam == "radial-gaussian-sum") {
    std::vector<std::pair<cplx, double>> terms;
    for (const auto& t : field(j, "terms")) terms.emplace_back(cget(t, "amp"), get<double>(t, "c"));
    return SymbolSpec::radial_gaussian_sum(std::move(terms));
  }
  if (fam == "radial-power") return SymbolSpec::radial_power(get<int>(j, "k"), cget_or(j, "amp", 1.0));
  if (fam == "radial-disc")
    return SymbolSpec::radial_disc(get<double>(j, "radius"), cget_or(j, "inside", 1.0), cget_or(j, "outside", 0.0));
  if (fam == "angular") return SymbolSpec::angular(get<int>(j, "power"));
  if (fam == "plane-wave") return SymbolSpec::plane_wave(cget(j, "z0"));
  if (fam == "vertical") return SymbolSpec::vertical(line_profile_from_json(field(j, "m0")), get_or(j, "sign", -1));
  if (fam == "grid")
    return SymbolSpec::grid(get<double>(j, "x0"), get<double>(j, "y0"), get<double>(j, "dx"), get<double>(j, "dy"),
                            get<int>(j, "nx"), get<int>(j, "ny"), clist_from(j, "values"),
                            cget_or(j, "outside", 0.0));
  if (fam == "wco")
    return SymbolSpec::wco(analytic_from_json(field(j, "psi")), cget_or(j, "a", 0.0), cget(j, "lambda"));
  if (fam == "sum") {
    std::vector<std::pair<cplx, SymbolSpec>> terms;
    for (const auto& t : field(j, "terms")) terms.emplace_back(cget_or(t, "coef", 1.0), symbol_from_json(field(t, "symbol")));
    return SymbolSpec::sum(std::move(terms));
  }
  throw SpecError("unknown symbol family \"" + fam + "\"");
}

// ---------------------------------------------------------------- measures

json measure_to_json(const MeasureSpec& rho) {
  json atoms = json::array();
  for (const auto& [x, w] : rho.atom_list()) atoms.push_back({{"at", x}, {"weight", complex_to_json(w)}});
  json j{{"atoms", atoms}};
  if (rho.density()) j["density"] = {{"t", rho.density()->t}, {"values", clist(rho.density()->values)}};
  return j;
}

MeasureSpec measure_from_json(const json& j) {
  MeasureSpec rho;
  if (j.contains("density")) {
    const json& d = j.at("density");
    if (d.contains("power_law")) {
      const json& p = d.at("power_law");
      const json& hi = field(p, "t1");
      double t1 = hi.is_string() && hi.get<std::string>() == "inf" ? std::numeric_limits<double>::infinity()
                                                                    : get<double>(p, "t1");
      rho = MeasureSpec::power_density(cget_or(p, "coef", 1.0), get<double>(p, "power"), get<double>(p, "t0"), t1,
                                       get_or(p, "samples", 2001));
    } else {
      rho.set_density(MeasureDensity{get<std::vector<double>>(d, "t"), clist_from(d, "values")});
    }
  }
  if (j.contains("atoms")) {
    for (const auto& a : j.at("atoms")) rho.add_atom(get<double>(a, "at"), cget_or(a, "weight", 1.0));
  }
  return rho;
}

// ---------------------------------------------------------------- operator specs

json operator_spec_to_json(const OperatorSpec& spec) {
  json params = std::visit(
      overloaded{
          [](const ToeplitzSpec& s) { return json{{"symbol", symbol_to_json(s.symbol)}}; },
          [](const WeylSpec& s) { return json{{"z", complex_to_json(s.z)}}; },
          [](const WeightedCompositionSpec& s) {
            return json{{"psi", analytic_to_json(s.psi)}, {"a", complex_to_json(s.a)}, {"lambda", complex_to_json(s.lambda)}};
          },
          [](const SingularIntegralSpec& s) {
            return json{{"m", line_profile_to_json(s.m)},
                        {"method", s.method == SingularMethod::Direct ? "direct" : "multiplier"}};
          },
          [](const VolterraSpec& s) {
            return json{{"gprime", analytic_to_json(s.gprime)}, {"a", complex_to_json(s.a)},
                        {"lambda", complex_to_json(s.lambda)}};
          },
          [](const ToeplitzTypeSpec& s) { return json{{"symbol", symbol_to_json(s.symbol)}, {"j", s.j}}; },
          [](const HausdorffSpec& s) { return json{{"rho", measure_to_json(s.rho)}}; },
          [](const ShiftSpec& s) { return json{{"k", s.k}}; },
          [](const ParitySpec&) { return json::object(); },
          [](const IdentitySpec&) { return json::object(); },
          [](const AdjointSpec& s) { return json{{"of", operator_spec_to_json(*s.of)}}; },
          [](const ProductSpec& s) {
            json f = json::array();
            for (const auto& p : s.factors) f.push_back(operator_spec_to_json(*p));
            return json{{"factors", f}};
          },
          [](const SumSpec& s) {
            json t = json::array();
            for (const auto& [c, p] : s.terms)
              t.push_back({{"coef", complex_to_json(c)}, {"op", operator_spec_to_json(*p)}});
            return json{{"terms", t}};
          }},
      spec.get());
  return json{{"class", spec.class_name()}, {"params", params}};
}

OperatorSpec operator_spec_from_json(const json& j) {
  const std::string cls = get<std::string>(j, "class");
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (!params.is_object()) throw SpecError("params must be an object");
  auto sub = [](const json& e) { return std::make_shared<const OperatorSpec>(operator_spec_from_json(e)); };
  if (cls == "toeplitz") return ToeplitzSpec{symbol_from_json(field(params, "symbol"))};
  if (cls == "weyl") return WeylSpec{cget(params, "z")};
  if (cls == "weighted-composition")
    return WeightedCompositionSpec{analytic_from_json(field(params, "psi")), cget_or(params, "a", 0.0),
                                   cget(params, "lambda")};
  if (cls == "singular-integral") {
    const std::string method = get_or<std::string>(params, "method", "multiplier");
    if (method != "multiplier" && method != "direct") throw SpecError("method must be multiplier or direct");
    return SingularIntegralSpec{line_profile_from_json(field(params, "m")),
                                method == "direct" ? SingularMethod::Direct : SingularMethod::Multiplier};
  }
  if (cls == "volterra")
    return VolterraSpec{analytic_from_json(field(params, "gprime")), cget_or(params, "a", 0.0),
                        cget(params, "lambda")};
  if (cls == "toeplitz-type") return ToeplitzTypeSpec{symbol_from_json(field(params, "symbol")), get<int>(params, "j")};
  if (cls == "hausdorff") return HausdorffSpec{measure_from_json(field(params, "rho"))};
  if (cls == "shift") return ShiftSpec{get<int>(params, "k")};
  if (cls == "parity") return ParitySpec{};
  if (cls == "identity") return IdentitySpec{};
  if (cls == "adjoint") return AdjointSpec{sub(field(params, "of"))};
  if (cls == "product") {
    ProductSpec p;
    for (const auto& f : field(params, "factors")) p.factors.push_back(sub(f));
    return p;
  }
  if (cls == "sum") {
    SumSpec s;
    for (const auto& t : field(params, "terms")) s.terms.emplace_back(cget_or(t, "coef", 1.0), sub(field(t, "op")));
    return s;
  }
  throw SpecError("unknown operator class \"" + cls + "\"");
}

OperatorSpec load_operator_spec(const std::filesystem::path& path) {
  json j;
  try {
    j = read_json_file(path);
  } catch (const json::exception& e) {
    throw SpecError(path.string() + ": " + e.what());
  }
  try {
    return operator_spec_from_json(j);
  } catch (const json::exception& e) {
    throw SpecError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------- matrices

json matrix_to_json(const TruncatedOperator& A) {
  const int N = A.dim();
  json entries = json::array();
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) entries.push_back(complex_to_json(A(m, n)));
  return json{{"dim", N},
              {"layout", "row-major"},
              {"entries", entries},
              {"provenance", A.describe()},
              {"truncation_tail", A.truncation_tail()}};
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  const int N = get<int>(j, "dim");
  if (get<std::string>(j, "layout") != "row-major") throw SpecError("only row-major layout is supported");
  const json& e = field(j, "entries");
  if (N < 0 || !e.is_array() || e.size() != static_cast<std::size_t>(N) * N)
    throw SpecError("entries must hold dim*dim values");
  Eigen::MatrixXcd M(N, N);
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) M(m, n) = complex_from_json(e[static_cast<std::size_t>(m) * N + n]);
  return M;
}

void write_matrix(const TruncatedOperator& A, const std::filesystem::path& path) {
  write_json_file(matrix_to_json(A), path);
}

Eigen::MatrixXcd read_matrix(const std::filesystem::path& path) { return matrix_from_json(read_json_file(path)); }

std::string grid_to_csv(const GridFunction& g) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "re,im,value_re,value_im\n";
  for (std::size_t i = 0; i < g.points.size(); ++i)
    os << g.points[i].real() << ',' << g.points[i].imag() << ',' << g.values[i].real() << ','
       << g.values[i].imag() << '\n';
  return os.str();
}

// ---------------------------------------------------------------- files

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read " + path.string());
  return json::parse(in);
}

void write_text_file(const std::string& text, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_json_file(const json& j, const std::filesystem::path& path) { write_text_file(j.dump(2) + "\n", path); }

}  // namespace fock::verify
