#include "hmap/reversion.hpp"

#include <functional>

namespace hmap {

TruncatedSeries substitute_series(const TruncatedSeries& s, const std::string& var,
                                  const TruncatedSeries& value, const Poly::Term* unit_hint) {
  const auto groups = s.coeffs_in(var);
  TruncatedSeries out = TruncatedSeries::zero(s.caps());
  TruncatedSeries inv;
  bool have_inv = false;
  // Powers rebuilt per exponent; the exponent range is tiny here.
  for (const auto& [k, coeff] : groups) {
    TruncatedSeries factor = TruncatedSeries::constant(value.caps(), Rational(1));
    if (k > 0) {
      factor = value.pow(k);
    } else if (k < 0) {
      if (!have_inv) {
        inv = value.invert(unit_hint);
        have_inv = true;
      }
      factor = inv.pow(-k);
    }
    out += coeff.truncated_to(out.caps()) * factor;
  }
  return out;
}

namespace {

// Shared fixed-point driver: r_{n+1} = κ⁻¹·(target − tail(r_n)).
TruncatedSeries solve_fixed_point(const Poly::Term& kappa, const TruncatedSeries& target,
                                  const std::function<TruncatedSeries(const TruncatedSeries&)>& tail,
                                  int max_iter) {
  const Monomial kinv_m = Monomial::unit(kappa.first.e.size()).over(kappa.first);
  const Rational kinv_c = Rational(1) / kappa.second;
  TruncatedSeries r = target.mul_term(kinv_m, kinv_c);
  for (int it = 0; it < max_iter; ++it) {
    TruncatedSeries next = (target - tail(r)).mul_term(kinv_m, kinv_c);
    if (next == r) return r;
    r = next;
  }
  throw AlgebraError("reversion: fixed point did not stabilize within the cap window");
}

Poly::Term single_term_coeff(const TruncatedSeries& s, const std::string& var, int exp,
                             const char* what) {
  const TruncatedSeries k = s.coeff_of(var, exp);
  if (k.poly().size() != 1)
    throw AlgebraError(std::string(what) + ": dominant coefficient must be a single invertible term");
  return k.poly().terms().front();
}

}  // namespace

TruncatedSeries laurent_reversion(const TruncatedSeries& s, const std::string& vin,
                                  const std::string& wout) {
  if (s.poly().min_degree_in(vin) < -1)
    throw AlgebraError("laurent_reversion: input has a pole worse than first order");
  const Poly::Term kappa = single_term_coeff(s, vin, -1, "laurent_reversion");
  if (kappa.first.exp(s.ring()->index(vin)) != 0 || kappa.first.exp(s.ring()->index(wout)) != 0)
    throw AlgebraError("laurent_reversion: dominant coefficient depends on the series variables");
  const TruncatedSeries tail_in = s - TruncatedSeries(Poly::term(s.ring(), kappa.first, kappa.second), s.caps())
                                          .mul_var(vin, -1);
  const Caps out_caps = s.caps();
  const TruncatedSeries target = TruncatedSeries::var(out_caps, wout, -1);
  const int bound = out_caps.get(wout);
  if (bound == Caps::kNone)
    throw AlgebraError("laurent_reversion: output variable must be capped");

  // κ·r⁻¹ + tail(r) = wout⁻¹, so r = κ·(wout⁻¹ − tail(r))⁻¹ with
  // leading term κ·wout; tail_in has no pole, so only nonnegative
  // powers of r are ever substituted.
  Poly::Term inv_unit{Monomial::unit(s.ring()->arity()), Rational(1)};
  inv_unit.first.e[s.ring()->index(wout)] = -1;
  TruncatedSeries r = TruncatedSeries::var(out_caps, wout, 1).mul_term(kappa.first, kappa.second);
  for (int it = 0; it < bound + 4; ++it) {
    TruncatedSeries next = (target - substitute_series(tail_in, vin, r))
                               .invert(&inv_unit)
                               .mul_term(kappa.first, kappa.second);
    if (next == r) return r;
    r = next;
  }
  throw AlgebraError("reversion: fixed point did not stabilize within the cap window");
}

TruncatedSeries reversion_at_zero(const TruncatedSeries& s, const std::string& v,
                                  const std::string& w) {
  if (s.poly().min_degree_in(v) < 1)
    throw AlgebraError("reversion_at_zero: input must vanish to first order");
  const Poly::Term kappa = single_term_coeff(s, v, 1, "reversion_at_zero");
  if (kappa.first.exp(s.ring()->index(v)) != 0 || kappa.first.exp(s.ring()->index(w)) != 0)
    throw AlgebraError("reversion_at_zero: dominant coefficient depends on the series variables");
  const TruncatedSeries tail_in = s - TruncatedSeries(Poly::term(s.ring(), kappa.first, kappa.second), s.caps())
                                          .mul_var(v, 1);
  const Caps out_caps = s.caps();
  const TruncatedSeries target = TruncatedSeries::var(out_caps, w, 1);
  const int bound = out_caps.get(w);
  if (bound == Caps::kNone)
    throw AlgebraError("reversion_at_zero: output variable must be capped");
  auto tail = [&](const TruncatedSeries& r) { return substitute_series(tail_in, v, r); };
  return solve_fixed_point(kappa, target, tail, bound + 4);
}

}  // namespace hmap
