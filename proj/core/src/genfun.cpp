#include "hmap/genfun.hpp"

#include <functional>

namespace hmap {

namespace {

int required_cap(const Caps& caps, const char* var) {
  const int v = caps.get(var);
  if (v == Caps::kNone) throw AlgebraError(std::string("aux series: variable ") + var + " must be capped");
  return v;
}

TruncatedSeries lift_to(const TruncatedSeries& s, const Caps& caps) {
  return TruncatedSeries(s.poly().lift(caps.ring), caps);
}

TruncatedSeries bracket_at(PeelOracle& oracle, const BoundaryWord& w, const Caps& caps) {
  return lift_to(oracle.bracket(w, required_cap(caps, "cinv")), caps);
}

}  // namespace

Poly potential_derivative(const ModelSpec& spec, const RingPtr& ring, bool black,
                          const std::string& var_inv) {
  const int dmax = black ? spec.dtilde() : spec.d();
  Poly acc = Poly::zero(ring);
  for (int k = 2; k <= dmax; ++k) {
    const Poly tk = black ? spec.black_coupling(ring, k) : spec.white_coupling(ring, k);
    if (tk.is_zero()) continue;
    acc -= tk * Poly::var(ring, var_inv, -(k - 1));
  }
  return acc;
}

TruncatedSeries aux_W(PeelOracle& oracle, const Caps& caps) {
  const int xo = required_cap(caps, kXInv);
  TruncatedSeries acc = TruncatedSeries::zero(caps);
  for (int p = 0; p + 1 <= xo; ++p) {
    const BoundaryWord w = chain_word(p, 0, 0);
    acc += bracket_at(oracle, w, caps).mul_var(kXInv, p + 1);
  }
  return acc;
}

TruncatedSeries aux_Wtilde(PeelOracle& oracle, const Caps& caps) {
  const int yo = required_cap(caps, kYInv);
  TruncatedSeries acc = TruncatedSeries::zero(caps);
  for (int q = 0; q + 1 <= yo; ++q) {
    const BoundaryWord w = chain_word(0, 0, q);
    acc += bracket_at(oracle, w, caps).mul_var(kYInv, q + 1);
  }
  return acc;
}

TruncatedSeries aux_Y(PeelOracle& oracle, const Caps& caps) {
  const Poly vp = potential_derivative(oracle.spec(), caps.ring, /*black=*/false, kXInv);
  return (aux_W(oracle, caps) - TruncatedSeries(vp, caps)).mul_var("cinv", 1);
}

TruncatedSeries aux_X(PeelOracle& oracle, const Caps& caps) {
  const Poly vp = potential_derivative(oracle.spec(), caps.ring, /*black=*/true, kYInv);
  return (aux_Wtilde(oracle, caps) - TruncatedSeries(vp, caps)).mul_var("cinv", 1);
}

TruncatedSeries f_series(PeelOracle& oracle, int i, int j, const Caps& caps) {
  const int wo = required_cap(caps, kWInv);
  TruncatedSeries acc = TruncatedSeries::zero(caps);
  for (int k = 0; k + 1 <= wo; ++k)
    acc += bracket_at(oracle, chain_word(i, k, j), caps).mul_var(kWInv, k + 1);
  return acc;
}

TruncatedSeries fhat_series(PeelOracle& oracle, const Caps& caps) {
  return f_series(oracle, 0, 0, caps) - TruncatedSeries::var(caps, "cinv", -1);
}

TruncatedSeries aux_m(PeelOracle& oracle, int j, const Caps& caps) {
  const int xo = required_cap(caps, kXInv);
  const int wo = required_cap(caps, kWInv);
  TruncatedSeries acc = TruncatedSeries::zero(caps);
  for (int a = 0; a + 1 <= xo; ++a)
    for (int k = 0; k + 1 <= wo; ++k)
      acc += bracket_at(oracle, chain_word(a, k, j), caps).mul_var(kXInv, a + 1).mul_var(kWInv, k + 1);
  return acc;
}

TruncatedSeries aux_M(PeelOracle& oracle, const Caps& caps) { return aux_m(oracle, 0, caps); }

TruncatedSeries aux_R(PeelOracle& oracle, const Caps& caps) {
  const ModelSpec& spec = oracle.spec();
  TruncatedSeries acc = TruncatedSeries::zero(caps);
  for (int i = 0; i <= spec.d() - 2; ++i)
    for (int k = i + 2; k <= spec.d(); ++k) {
      const Poly tk = spec.white_coupling(caps.ring, k);
      if (tk.is_zero()) continue;
      acc += f_series(oracle, k - 2 - i, 0, caps).mul_poly(tk).mul_var(kXInv, -i);
    }
  return -acc;
}

TruncatedSeries aux_Rtilde(PeelOracle& oracle, const Caps& caps) {
  const ModelSpec& spec = oracle.spec();
  TruncatedSeries acc = TruncatedSeries::zero(caps);
  for (int j = 0; j <= spec.dtilde() - 2; ++j)
    for (int l = j + 2; l <= spec.dtilde(); ++l) {
      const Poly tl = spec.black_coupling(caps.ring, l);
      if (tl.is_zero()) continue;
      acc += f_series(oracle, 0, l - 2 - j, caps).mul_poly(tl).mul_var(kYInv, -j);
    }
  return -acc;
}

TruncatedSeries aux_Splus(PeelOracle& oracle, const Caps& caps) {
  const ModelSpec& spec = oracle.spec();
  TruncatedSeries acc = TruncatedSeries::zero(caps);
  for (int j = 0; j <= spec.dtilde() - 2; ++j)
    for (int l = j + 2; l <= spec.dtilde(); ++l) {
      const Poly tl = spec.black_coupling(caps.ring, l);
      if (tl.is_zero()) continue;
      acc += aux_m(oracle, l - 2 - j, caps).mul_poly(tl).mul_var(kYInv, -j);
    }
  return -acc;
}

namespace {

TruncatedSeries double_divided_difference(PeelOracle& oracle, const Caps& caps,
                                          const std::function<TruncatedSeries(int, int)>& inner) {
  const ModelSpec& spec = oracle.spec();
  TruncatedSeries acc = TruncatedSeries::zero(caps);
  for (int i = 0; i <= spec.d() - 2; ++i)
    for (int j = 0; j <= spec.dtilde() - 2; ++j)
      for (int k = i + 2; k <= spec.d(); ++k) {
        const Poly tk = spec.white_coupling(caps.ring, k);
        if (tk.is_zero()) continue;
        for (int l = j + 2; l <= spec.dtilde(); ++l) {
          const Poly tl = spec.black_coupling(caps.ring, l);
          if (tl.is_zero()) continue;
          acc += inner(k - 2 - i, l - 2 - j)
                     .mul_poly(tk * tl)
                     .mul_var(kXInv, -i)
                     .mul_var(kYInv, -j);
        }
      }
  return acc;
}

}  // namespace

TruncatedSeries aux_Phat(PeelOracle& oracle, const Caps& caps) {
  return double_divided_difference(
      oracle, caps, [&](int a, int b) { return f_series(oracle, a, b, caps); });
}

TruncatedSeries aux_P(PeelOracle& oracle, const Caps& caps) {
  return double_divided_difference(oracle, caps, [&](int a, int b) {
    return lift_to(oracle.d_coeff(a, b, required_cap(caps, "cinv")), caps);
  });
}

TruncatedSeries aux_Aofw(PeelOracle& oracle, const Caps& caps) {
  const int wo = required_cap(caps, "w");
  TruncatedSeries acc = TruncatedSeries::zero(caps);
  for (int r = 0; r + 1 <= wo; ++r)
    acc += bracket_at(oracle, chain_word(0, r, 0), caps).mul_var("w", r + 1);
  return acc;
}

TruncatedSeries aux_series(PeelOracle& oracle, const std::string& name, const Caps& caps) {
  if (name == "W") return aux_W(oracle, caps);
  if (name == "Wtilde") return aux_Wtilde(oracle, caps);
  if (name == "Y") return aux_Y(oracle, caps);
  if (name == "X") return aux_X(oracle, caps);
  if (name == "M") return aux_M(oracle, caps);
  if (name == "R") return aux_R(oracle, caps);
  if (name == "Rtilde") return aux_Rtilde(oracle, caps);
  if (name == "Splus") return aux_Splus(oracle, caps);
  if (name == "Phat") return aux_Phat(oracle, caps);
  if (name == "P") return aux_P(oracle, caps);
  if (name == "Aofw") return aux_Aofw(oracle, caps);
  throw AlgebraError("unknown aux series: " + name);
}

std::map<int, TruncatedSeries> omega_coefficients(const TruncatedSeries& s) {
  return s.coeffs_in(kWInv);
}

IsingWeights ising_parameter_match(const RationalExpr& c, const RationalExpr& t2,
                                   const RationalExpr& tt2) {
  const RationalExpr disc = c * c - t2 * tt2;
  if (disc.is_zero() || c.is_zero())
    throw AlgebraError("ising_parameter_match: degenerate couplings (singular matching matrix)");
  IsingWeights w;
  w.cpp = tt2 / (c * disc);
  w.cmm = t2 / (c * disc);
  w.cpm = RationalExpr::constant(c.ring(), Rational(1)) / disc;
  w.cpp_resummed = c * tt2 / disc;
  w.cmm_resummed = c * t2 / disc;
  w.cpm_resummed = c * c / disc;
  return w;
}

IsingWeights ising_parameter_match(const Rational& c, const Rational& t2, const Rational& tt2) {
  const RingPtr r = Ring::make({});
  return ising_parameter_match(RationalExpr::constant(r, c), RationalExpr::constant(r, t2),
                               RationalExpr::constant(r, tt2));
}

}  // namespace hmap
