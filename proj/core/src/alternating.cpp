#include "hmap/alternating.hpp"

#include <algorithm>
#include <cctype>

#include "hmap/determinant.hpp"
#include "hmap/reversion.hpp"

namespace hmap {

namespace {

bool parse_unknown(const std::string& name, int* i, int* j) {
  if (name.size() != 3 || name[0] != 'g') return false;
  if (!std::isdigit(static_cast<unsigned char>(name[1])) ||
      !std::isdigit(static_cast<unsigned char>(name[2])))
    return false;
  *i = name[1] - '0';
  *j = name[2] - '0';
  return true;
}

Poly xpow(const RingPtr& r, const std::string& name, int e) {
  return e == 0 ? Poly::constant(r, 1) : Poly::var(r, name, e);
}

}  // namespace

std::string unknown_name(int i, int j) {
  if (i < 0 || i > 9 || j < 0 || j > 9) throw AlgebraError("unknown_name: index out of range");
  return "g" + std::to_string(i) + std::to_string(j);
}

std::vector<std::pair<int, int>> unknown_indices(int d, int dtilde) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= d - 2; ++i)
    for (int j = 0; j <= dtilde - 2; ++j) out.emplace_back(i, j);
  return out;
}

SymbolicQ build_Q(const ModelSpec& spec) {
  const int d = spec.d();
  const int dt = spec.dtilde();
  std::vector<std::string> extras = {kXVar, kYVar, kWInv};
  auto add = [&](const std::string& n) {
    if (std::find(extras.begin(), extras.end(), n) == extras.end()) extras.push_back(n);
  };
  for (const auto& [i, j] : unknown_indices(d, dt)) add(unknown_name(i, j));
  // Q references f01 and f10 even when the block misses them (d or
  // dtilde equal to 2).
  add(unknown_name(0, 1));
  add(unknown_name(1, 0));
  const RingPtr r = spec.ring_with(extras);

  auto g = [&](int i, int j) { return Poly::var(r, unknown_name(i, j)); };
  const Poly c = Poly::var(r, "cinv", -1);
  const Poly csq = Poly::var(r, "cinv", -2);
  const Poly w = Poly::var(r, kWInv, -1);
  const Poly x = Poly::var(r, kXVar);
  const Poly y = Poly::var(r, kYVar);

  Poly vpx = Poly::zero(r);
  for (int k = 2; k <= d; ++k) vpx -= spec.white_coupling(r, k) * xpow(r, kXVar, k - 1);
  Poly vty = Poly::zero(r);
  for (int l = 2; l <= dt; ++l) vty -= spec.black_coupling(r, l) * xpow(r, kYVar, l - 1);

  Poly R = Poly::zero(r);
  for (int i = 0; i <= d - 2; ++i)
    for (int k = i + 2; k <= d; ++k)
      R -= spec.white_coupling(r, k) * g(k - 2 - i, 0) * xpow(r, kXVar, i);
  Poly Rt = Poly::zero(r);
  for (int j = 0; j <= dt - 2; ++j)
    for (int l = j + 2; l <= dt; ++l)
      Rt -= spec.black_coupling(r, l) * g(0, l - 2 - j) * xpow(r, kYVar, j);
  Poly Ph = Poly::zero(r);
  for (int i = 0; i <= d - 2; ++i)
    for (int j = 0; j <= dt - 2; ++j)
      for (int k = i + 2; k <= d; ++k)
        for (int l = j + 2; l <= dt; ++l)
          Ph += spec.white_coupling(r, k) * spec.black_coupling(r, l) * g(k - 2 - i, l - 2 - j) *
                xpow(r, kXVar, i) * xpow(r, kYVar, j);

  const Poly fh = g(0, 0) - c;
  const Poly white_factor = vpx + c * y - g(0, 1);
  const Poly black_factor = vty + c * x - g(1, 0);

  SymbolicQ sq;
  sq.d = d;
  sq.dtilde = dt;
  sq.q = Poly::var(r, "cinv", 2) *
         (-(c * fh * white_factor * black_factor) + c * x * R * black_factor +
          c * y * Rt * white_factor + w * R * Rt + (fh * w + c * x * y) * (csq * g(0, 0) - Ph));
  return sq;
}

TruncatedSeries eval_at_oracle(const Poly& p, PeelOracle& oracle, const Caps& caps) {
  TruncatedSeries s(p.lift(caps.ring), caps);
  for (const std::string& name : caps.ring->names()) {
    int i = 0, j = 0;
    if (!parse_unknown(name, &i, &j)) continue;
    if (s.poly().degree_in(name) == 0 && s.poly().min_degree_in(name) == 0) continue;
    if (s.poly().min_degree_in(name) < 0)
      throw AlgebraError("eval_at_oracle: negative power of " + name);
    const TruncatedSeries f = f_series(oracle, i, j, caps);
    TruncatedSeries acc = TruncatedSeries::zero(caps);
    for (const auto& [k, coeff] : s.coeffs_in(name)) acc += coeff * f.pow(k);
    s = acc;
  }
  return s;
}

TruncatedSeries q_at_oracle(const SymbolicQ& sq, PeelOracle& oracle, const Caps& caps) {
  return eval_at_oracle(sq.q, oracle, caps);
}

bool MEquationReport::all_zero() const {
  return eq1.is_zero() && eq2.is_zero() && remainder.is_zero() && tutte.is_zero();
}

MEquationReport check_M_equations(PeelOracle& oracle, const Caps& caps, const Caps& window) {
  const ModelSpec& spec = oracle.spec();
  const RingPtr& r = caps.ring;
  const Poly c = Poly::var(r, "cinv", -1);
  const Poly x = Poly::var(r, kXInv, -1);
  const Poly y = Poly::var(r, kYInv, -1);
  const Poly w = Poly::var(r, kWInv, -1);
  const Poly vpx = potential_derivative(spec, r, false, kXInv);
  const Poly vty = potential_derivative(spec, r, true, kYInv);

  const TruncatedSeries W = aux_W(oracle, caps);
  const TruncatedSeries Y = aux_Y(oracle, caps);
  const TruncatedSeries M = aux_M(oracle, caps);
  const TruncatedSeries R = aux_R(oracle, caps);
  const TruncatedSeries Rt = aux_Rtilde(oracle, caps);
  const TruncatedSeries Sp = aux_Splus(oracle, caps);
  const TruncatedSeries Ph = aux_Phat(oracle, caps);
  const TruncatedSeries f00 = f_series(oracle, 0, 0, caps);
  const TruncatedSeries f01 = f_series(oracle, 0, 1, caps);
  const TruncatedSeries f10 = f_series(oracle, 1, 0, caps);
  const TruncatedSeries fh = fhat_series(oracle, caps);

  MEquationReport rep;
  {
    const TruncatedSeries lhs = ((Sp.mul_poly(x) - Rt) * (TruncatedSeries(y, caps) - Y)).mul_poly(c);
    const TruncatedSeries rhs =
        M * ((TruncatedSeries(vty + c * x, caps) - f10).mul_poly(c * x) + Rt.mul_poly(w)) -
        f00.mul_poly(c * c * x) + Ph.mul_poly(x) +
        Rt * (TruncatedSeries(-vpx - c * y, caps) + f01);
    rep.eq1 = (lhs - rhs).truncated_to(window);
  }
  {
    const TruncatedSeries kernel = fh.mul_poly(w) + Y.mul_poly(c * x);
    rep.eq2 = (M * kernel + R.mul_poly(x) - fh * (W - f01)).truncated_to(window);
  }
  {
    // [x V'(x) M]_{x >= 0} keeps the xinv exponents <= 0.
    const TruncatedSeries full = M.mul_poly(x * vpx);
    Poly kept = Poly::zero(r);
    const std::size_t xi = r->index(kXInv);
    for (const auto& [mon, coeff] : full.poly().terms())
      if (mon.exp(xi) <= 0) kept += Poly::term(r, mon, coeff);
    rep.remainder =
        (TruncatedSeries(kept, caps) - R.mul_poly(x) - fh * f01).truncated_to(window);
  }
  {
    // winv read as w = 1/omega: every omega-series is already a
    // power series in that variable.
    const Poly wv = Poly::var(r, kWInv, 1);
    const TruncatedSeries ulM = M.mul_var(kWInv, -1) - W;
    const TruncatedSeries kc = TruncatedSeries(c, caps) - f00 - Y.mul_poly(c * wv * x);
    const TruncatedSeries ulR = (W * Y).mul_poly(c * wv * x) + R.mul_poly(x) + fh * f01;
    rep.tutte = (kc * ulM - ulR).truncated_to(window);
  }
  return rep;
}

CijSystem cij_system(const ModelSpec& spec) {
  if (spec.d() < 3 || spec.dtilde() < 3)
    throw AlgebraError("cij_system: no interior block below degree 3");
  CijSystem sys;
  sys.q = build_Q(spec);
  const RingPtr& r = sys.q.q.ring();
  for (const auto& [i, j] : unknown_indices(spec.d(), spec.dtilde())) {
    sys.indices.emplace_back(i, j);
    sys.qij.push_back(sys.q.q.coeff_of(kXVar, i).coeff_of(kYVar, j));
    sys.unknowns.push_back(unknown_name(i, j));
  }
  const std::size_t n = sys.qij.size();
  sys.jacobian.assign(n, {});
  for (std::size_t row = 0; row < n; ++row)
    for (const std::string& col : sys.unknowns)
      sys.jacobian[row].push_back(sys.qij[row].derivative(col));
  sys.jacobian_det = fraction_free_det(sys.jacobian, Poly::zero(r), Poly::constant(r, 1));
  return sys;
}

TruncatedSeries kernel_fixed_point(PeelOracle& oracle, int xi_order, const Caps& caps) {
  Caps acaps = caps;
  acaps.set("w", xi_order + 1);
  acaps.set(kXiInv, xi_order);
  const TruncatedSeries a = aux_Aofw(oracle, acaps);
  const TruncatedSeries one = TruncatedSeries::constant(acaps, 1);
  TruncatedSeries wser = TruncatedSeries::zero(acaps);
  for (int pass = 0; pass <= xi_order; ++pass)
    wser = (one - substitute_series(a, "w", wser)).mul_var(kXiInv, 1);
  return wser;
}

}  // namespace hmap
