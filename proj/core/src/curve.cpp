#include "hmap/curve.hpp"

#include <cctype>

#include "hmap/determinant.hpp"

namespace hmap {

namespace {

bool parse_indexed(const std::string& name, const char* prefix, int* k) {
  const std::string p(prefix);
  if (name.size() <= p.size() || name.compare(0, p.size(), p) != 0) return false;
  int v = 0;
  for (std::size_t i = p.size(); i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    v = v * 10 + (name[i] - '0');
  }
  *k = v;
  return true;
}

TruncatedSeries lift_to(const TruncatedSeries& s, const Caps& caps) {
  return TruncatedSeries(s.poly().lift(caps.ring), caps);
}

Caps shrunk(const Caps& caps, int by) {
  Caps out = caps;
  for (auto& b : out.bound)
    if (b != Caps::kNone) b = b > by ? b - by : 0;
  return out;
}

// gamma^(k-2) t_k = u^gamma_shift(k) * (stored series); odd k keeps one
// stray gamma out of the stored value.
int gamma_shift(int k) { return (k - 2 + (k % 2)) / 2; }

struct SideResult {
  std::map<int, TruncatedSeries> s;
  TruncatedSeries t;
  TruncatedSeries residual;
};

// Solves -sum_k u^gamma_shift(k) s_k X(z)^(k-1) + c Ych(z) =
// (t/u) z^-1 + O(z^-2) for the s_k, top degree down, where
// X = z + sum arg[k] z^-k and Ych = 1/z + sum add[j] z^j are the
// gamma-scaled branches.  The z^0 coefficient is the residual.
SideResult solve_side(const SpectralParameters& p, const std::vector<TruncatedSeries>& arg,
                      const std::vector<TruncatedSeries>& add, int dd) {
  const RingPtr rz = p.ring()->extended({kZBar});
  const Caps cz = caps_onto(p.u.caps(), rz);
  const Caps& base = p.u.caps();

  TruncatedSeries X = TruncatedSeries::var(cz, kZBar, -1);
  for (std::size_t k = 0; k < arg.size(); ++k)
    X += lift_to(arg[k], cz).mul_var(kZBar, static_cast<int>(k));
  std::vector<TruncatedSeries> xpow(static_cast<std::size_t>(dd), TruncatedSeries::constant(cz, 1));
  for (int k = 1; k < dd; ++k) xpow[static_cast<std::size_t>(k)] = xpow[static_cast<std::size_t>(k - 1)] * X;

  TruncatedSeries acc = TruncatedSeries::var(cz, kZBar, 1);
  for (std::size_t j = 0; j < add.size(); ++j)
    acc += lift_to(add[j], cz).mul_var(kZBar, -static_cast<int>(j));
  acc = acc * lift_to(p.c, cz);

  const TruncatedSeries uinv = p.u.invert();
  auto project = [&](const TruncatedSeries& s, int zdeg) {
    return TruncatedSeries(s.coeff_of(kZBar, -zdeg).poly().lift(base.ring), base);
  };

  SideResult out;
  for (int j = dd - 1; j >= 1; --j) {
    const int k = j + 1;
    TruncatedSeries sk = project(acc, j);
    for (int e = 0; e < gamma_shift(k); ++e) sk = sk * uinv;
    out.s.emplace(k, sk);
    acc -= lift_to(p.u.pow(gamma_shift(k)) * sk, cz) * xpow[static_cast<std::size_t>(k - 1)];
  }
  out.residual = project(acc, 0);
  out.t = p.u * project(acc, -1);
  return out;
}

}  // namespace

std::string alpha_name(int k) { return "al" + std::to_string(k); }
std::string beta_name(int k) { return "be" + std::to_string(k); }
std::string scaled_alpha_name(int k) { return "a" + std::to_string(k); }
std::string scaled_beta_name(int k) { return "b" + std::to_string(k); }

Caps caps_onto(const Caps& src, const RingPtr& target) {
  Caps out = Caps::none(target);
  if (!src.ring) return out;
  for (std::size_t i = 0; i < src.ring->arity(); ++i) {
    const std::int32_t b = src.bound[i];
    if (b != Caps::kNone && target->has(src.ring->name(i))) out.set(src.ring->name(i), b);
  }
  return out;
}

SpectralParameters SpectralParameters::mirrored() const {
  SpectralParameters m;
  m.d = dtilde;
  m.dtilde = d;
  m.c = c;
  m.u = u;
  m.a = b;
  m.b = a;
  return m;
}

SpectralParameters symbolic_quartic_parameters(bool symmetric) {
  std::vector<std::string> names = {"c", "g", alpha_name(1), alpha_name(3)};
  if (!symmetric) {
    names.push_back(beta_name(1));
    names.push_back(beta_name(3));
  }
  const RingPtr r = Ring::make(names);
  const Caps caps = Caps::none(r);
  auto ratio = [&](const std::string& v) {
    return TruncatedSeries::var(caps, v, 1).mul_var("g", -1);
  };
  SpectralParameters p;
  p.d = 4;
  p.dtilde = 4;
  p.c = TruncatedSeries::var(caps, "c", 1);
  p.u = TruncatedSeries::var(caps, "g", 2);
  p.a = {TruncatedSeries::zero(caps), ratio(alpha_name(1)), TruncatedSeries::zero(caps),
         ratio(alpha_name(3))};
  p.b = {TruncatedSeries::zero(caps), ratio(symmetric ? alpha_name(1) : beta_name(1)),
         TruncatedSeries::zero(caps), ratio(symmetric ? alpha_name(3) : beta_name(3))};
  return p;
}

SpectralParameters symbolic_scaled_quartic_parameters(bool symmetric) {
  std::vector<std::string> names = {"c", "u", scaled_alpha_name(1), scaled_alpha_name(3)};
  if (!symmetric) {
    names.push_back(scaled_beta_name(1));
    names.push_back(scaled_beta_name(3));
  }
  const RingPtr r = Ring::make(names);
  const Caps caps = Caps::none(r);
  auto v = [&](const std::string& n) { return TruncatedSeries::var(caps, n, 1); };
  SpectralParameters p;
  p.d = 4;
  p.dtilde = 4;
  p.c = v("c");
  p.u = v("u");
  p.a = {TruncatedSeries::zero(caps), v(scaled_alpha_name(1)), TruncatedSeries::zero(caps),
         v(scaled_alpha_name(3))};
  p.b = {TruncatedSeries::zero(caps), v(symmetric ? scaled_alpha_name(1) : scaled_beta_name(1)),
         TruncatedSeries::zero(caps), v(symmetric ? scaled_alpha_name(3) : scaled_beta_name(3))};
  return p;
}

CouplingSolution potentials_from_parameters(const SpectralParameters& p) {
  if (p.u.is_zero()) throw AlgebraError("potentials_from_parameters: gamma = 0 is degenerate");
  if (static_cast<int>(p.a.size()) != p.dtilde || static_cast<int>(p.b.size()) != p.d)
    throw AlgebraError("potentials_from_parameters: parameter count does not match degrees");

  SideResult white = solve_side(p, p.a, p.b, p.d);
  SideResult black = solve_side(p.mirrored(), p.b, p.a, p.dtilde);

  const Caps window = shrunk(p.u.caps(), p.d + p.dtilde);
  if (white.t.truncated_to(window) != black.t.truncated_to(window))
    throw AlgebraError("potentials_from_parameters: expansion conditions disagree on t");

  CouplingSolution out;
  out.t = white.t;
  out.white = std::move(white.s);
  out.black = std::move(black.s);
  out.white_residual = white.residual;
  out.black_residual = black.residual;
  return out;
}

SpectralParameters solve_even_curve(const ModelSpec& spec, int t_order, int edge_cap) {
  if (!spec.even_only())
    throw AlgebraError("solve_even_curve: only even coupling families are supported");
  if (spec.d() > 4 || spec.dtilde() > 4)
    throw AlgebraError("solve_even_curve: degrees above 4 are not supported");

  const RingPtr& r = spec.ring();
  Caps caps = Caps::none(r);
  caps.set("cinv", edge_cap).set("t", t_order);

  auto coupling = [&](bool white, int k) {
    const int top = white ? spec.d() : spec.dtilde();
    Poly v = (k <= top) ? (white ? spec.white_coupling(r, k) : spec.black_coupling(r, k))
                        : Poly::zero(r);
    return TruncatedSeries(std::move(v), caps);
  };
  const TruncatedSeries t2 = coupling(true, 2), t4 = coupling(true, 4);
  const TruncatedSeries s2 = coupling(false, 2), s4 = coupling(false, 4);
  const TruncatedSeries tc = TruncatedSeries::var(caps, "t", 1) * TruncatedSeries::var(caps, "cinv", 1);
  const TruncatedSeries cinv = TruncatedSeries::var(caps, "cinv", 1);
  const TruncatedSeries one = TruncatedSeries::constant(caps, 1);

  TruncatedSeries u = tc, a1, a3, b1, b3;
  const int guard = t_order + edge_cap + 4;
  for (int it = 0;; ++it) {
    if (it > guard) throw AlgebraError("solve_even_curve: fixed point did not stabilize");
    a3 = s4 * u * cinv;
    b3 = t4 * u * cinv;
    TruncatedSeries den;
    TruncatedSeries next;
    try {
      den = (one - (a3 * b3).scaled(9)).invert();
      a1 = (s2 * cinv + (t2 * cinv * a3).scaled(3)) * den;
      b1 = (t2 * cinv + (s2 * cinv * b3).scaled(3)) * den;
      next = tc * (one - a1 * b1 - (a3 * b3).scaled(3)).invert();
    } catch (const NotInvertibleError&) {
      throw AlgebraError("solve_even_curve: degenerate leading unit");
    }
    if (next == u) break;
    u = next;
  }

  SpectralParameters p;
  p.d = spec.d();
  p.dtilde = spec.dtilde();
  p.c = TruncatedSeries::var(caps, "cinv", -1);
  p.u = u;
  p.a.assign(static_cast<std::size_t>(p.dtilde), TruncatedSeries::zero(caps));
  p.b.assign(static_cast<std::size_t>(p.d), TruncatedSeries::zero(caps));
  if (p.dtilde >= 2) p.a[1] = a1;
  if (p.dtilde >= 4) p.a[3] = a3;
  if (p.d >= 2) p.b[1] = b1;
  if (p.d >= 4) p.b[3] = b3;
  return p;
}

TruncatedSeries build_E_determinant(const SpectralParameters& p) {
  const RingPtr r = p.ring()->extended({kXS, kYS});
  const Caps caps = caps_onto(p.u.caps(), r);
  const int n = p.d + p.dtilde;

  const TruncatedSeries zero = TruncatedSeries::zero(caps);
  const TruncatedSeries one = TruncatedSeries::constant(caps, 1);
  const TruncatedSeries xs = TruncatedSeries::var(caps, kXS, 1);
  const TruncatedSeries ys = TruncatedSeries::var(caps, kYS, 1);

  std::vector<std::vector<TruncatedSeries>> m(static_cast<std::size_t>(n),
                                              std::vector<TruncatedSeries>(static_cast<std::size_t>(n), zero));
  for (int i = 0; i < p.d; ++i) {
    m[i][i] = one;
    m[i][i + 1] = lift_to(p.a[0], caps) - xs;
    for (int k = 1; k < p.dtilde; ++k) m[i][i + 1 + k] = lift_to(p.a[k], caps);
  }
  for (int j = 0; j < p.dtilde; ++j) {
    const int row = p.d + j;
    for (int k = 0; k < p.d - 1; ++k) m[row][j + k] = lift_to(p.b[p.d - 1 - k], caps);
    m[row][j + p.d - 1] = lift_to(p.b[0], caps) - ys;
    m[row][j + p.d] = one;
  }

  TruncatedSeries det = fraction_free_det(m, zero, one);
  const Rational sign = (p.d % 2 == 0) ? Rational(-1) : Rational(1);
  return (det * lift_to(p.c * p.c * p.u, caps)).scaled(sign);
}

TruncatedSeries build_E_formula(PeelOracle& oracle, const Caps& caps) {
  const RingPtr& r = caps.ring;
  const ModelSpec& spec = oracle.spec();
  const TruncatedSeries vx(potential_derivative(spec, r, false, kXInv), caps);
  const TruncatedSeries vy(potential_derivative(spec, r, true, kYInv), caps);
  const TruncatedSeries cy = TruncatedSeries::var(caps, "cinv", -1).mul_var(kYInv, -1);
  const TruncatedSeries cx = TruncatedSeries::var(caps, "cinv", -1).mul_var(kXInv, -1);
  const TruncatedSeries ct = TruncatedSeries::var(caps, "cinv", -1).mul_var("t", 1);
  return (vx + cy) * (vy + cx) + aux_P(oracle, caps).mul_var("cinv", 1) - ct;
}

TruncatedSeries lagrange_Y_coeff(const SpectralParameters& p, int k) {
  if (k < 0) throw AlgebraError("lagrange_Y_coeff: negative index");
  const RingPtr rz = p.ring()->extended({kZBar});
  const Caps cz = caps_onto(p.u.caps(), rz);

  TruncatedSeries phi = TruncatedSeries::constant(cz, 1);
  for (std::size_t i = 0; i < p.a.size(); ++i)
    phi += lift_to(p.a[i], cz).mul_var(kZBar, static_cast<int>(i) + 1);
  TruncatedSeries dups = TruncatedSeries::constant(cz, 1);
  for (std::size_t j = 1; j < p.b.size(); ++j)
    dups += lift_to(p.b[j], cz).mul_var(kZBar, -static_cast<int>(j) - 1).scaled(-static_cast<int>(j));

  const TruncatedSeries w = (dups * phi.pow(k + 1)).coeff_of(kZBar, k);
  TruncatedSeries base(w.poly().lift(p.ring()), p.u.caps());
  base = base.scaled(Rational(1, k + 1));
  if (k % 2 == 1) {
    if (!base.is_zero())
      throw AlgebraError("lagrange_Y_coeff: odd coefficient on odd-parity data needs a bare gamma");
    return base;
  }
  return base * p.u.pow((k + 2) / 2);
}

TruncatedSeries lagrange_X_coeff(const SpectralParameters& p, int k) {
  return lagrange_Y_coeff(p.mirrored(), k);
}

DijForms dij_splitting_forms(const SpectralParameters& p) {
  const CouplingSolution kappa = potentials_from_parameters(p);
  const Caps& caps = p.u.caps();
  auto coupling = [&](const std::map<int, TruncatedSeries>& side, int k) {
    auto it = side.find(k);
    return it == side.end() ? TruncatedSeries::zero(caps) : it->second;
  };
  const TruncatedSeries tt2 = coupling(kappa.black, 2);
  const TruncatedSeries tt4 = coupling(kappa.black, 4);
  const TruncatedSeries t = kappa.t;
  const TruncatedSeries cinv = p.c.invert();
  auto bmom = [&](int q) { return p.c * lagrange_X_coeff(p, q); };
  const TruncatedSeries b2 = bmom(2), b4 = bmom(4), b6 = bmom(6), b8 = bmom(8);

  DijForms out;
  out.d11 = (t * t + tt2 * b2 + tt4 * b4) * cinv;
  out.d22 = (t * t * t + tt4 * b2 * b2 + (t * tt2 * b2).scaled(3) +
             (tt2 * tt2 + (t * tt4).scaled(3)) * b4 + (tt2 * tt4 * b6).scaled(2) +
             tt4 * tt4 * b8) *
            cinv * cinv;
  return out;
}

Poly even_parity_reduce(const Poly& src, const RingPtr& target) {
  const RingPtr& sr = src.ring();
  // Per source variable: target slot (or -1 for g) and whether it
  // counts toward the gamma weight.
  std::vector<int> slot(sr->arity());
  std::vector<bool> weighted(sr->arity(), false);
  for (std::size_t i = 0; i < sr->arity(); ++i) {
    const std::string& name = sr->name(i);
    int k = 0;
    if (name == "g") {
      slot[i] = -1;
      weighted[i] = true;
    } else if (parse_indexed(name, "al", &k)) {
      slot[i] = static_cast<int>(target->index(scaled_alpha_name(k)));
      weighted[i] = true;
    } else if (parse_indexed(name, "be", &k)) {
      slot[i] = static_cast<int>(target->index(scaled_beta_name(k)));
      weighted[i] = true;
    } else {
      slot[i] = static_cast<int>(target->index(name));
    }
  }
  const std::size_t uslot = target->index("u");

  std::vector<Poly::Term> terms;
  terms.reserve(src.size());
  for (const auto& [mon, coeff] : src.terms()) {
    Monomial out = Monomial::unit(target->arity());
    int weight = 0;
    for (std::size_t i = 0; i < sr->arity(); ++i) {
      const int e = mon.exp(i);
      if (e == 0) continue;
      if (weighted[i]) weight += e;
      if (slot[i] >= 0) out.e[static_cast<std::size_t>(slot[i])] += static_cast<std::int16_t>(e);
    }
    if (weight % 2 != 0)
      throw AlgebraError("even_parity_reduce: odd gamma weight in " + src.to_string());
    out.e[uslot] += static_cast<std::int16_t>(weight / 2);
    terms.emplace_back(out, coeff);
  }
  return Poly::from_terms(target, std::move(terms));
}

}  // namespace hmap
