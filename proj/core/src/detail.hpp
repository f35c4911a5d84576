#pragma once

#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "fockbench/types.hpp"

namespace fock::detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline std::string fmt(cplx c) {
  std::ostringstream os;
  os.precision(6);
  if (c.imag() == 0.0)
    os << c.real();
  else
    os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
  return os.str();
}

using lcplx = std::complex<long double>;
using Series = std::vector<lcplx>;

// Product truncated at z^deg.
inline Series series_mul(const Series& a, const Series& b, int deg) {
  Series out(static_cast<size_t>(deg) + 1, 0.0L);
  for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(deg); ++i) {
    if (a[i] == lcplx(0)) continue;
    for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(deg); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

// In-place multiplication by (a + lambda z), truncated at z^deg.
inline void series_mul_affine(Series& s, lcplx a, lcplx lambda, int deg) {
  s.resize(static_cast<size_t>(deg) + 1, 0.0L);
  for (int k = deg; k >= 0; --k) {
    lcplx v = a * s[k];
    if (k > 0) v += lambda * s[k - 1];
    s[k] = v;
  }
}

inline lcplx to_l(cplx c) { return {c.real(), c.imag()}; }
inline cplx to_d(lcplx c) {
  return {static_cast<double>(c.real()), static_cast<double>(c.imag())};
}

}  // namespace fock::detail
