#include "hmap/series.hpp"

namespace hmap {

TruncatedSeries::TruncatedSeries(Poly p, Caps caps) : caps_(std::move(caps)) {
  if (!p.ring() || !caps_.ring || !p.ring()->same_as(*caps_.ring))
    throw RingMismatchError("series/caps ring mismatch");
  p_ = p.truncated(caps_);
}

TruncatedSeries TruncatedSeries::zero(const Caps& caps) {
  return TruncatedSeries(Poly::zero(caps.ring), caps);
}

TruncatedSeries TruncatedSeries::constant(const Caps& caps, Rational c) {
  return TruncatedSeries(Poly::constant(caps.ring, std::move(c)), caps);
}

TruncatedSeries TruncatedSeries::var(const Caps& caps, const std::string& name, int exp) {
  return TruncatedSeries(Poly::var(caps.ring, name, exp), caps);
}

TruncatedSeries TruncatedSeries::operator-() const { return TruncatedSeries(-p_, caps_); }

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  Caps c = Caps::meet(caps_, o.caps_);
  return TruncatedSeries(p_ + o.p_, std::move(c));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  Caps c = Caps::meet(caps_, o.caps_);
  return TruncatedSeries(p_ - o.p_, std::move(c));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  Caps c = Caps::meet(caps_, o.caps_);
  return TruncatedSeries(p_.times(o.p_, &c), std::move(c));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  *this = *this + o;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  *this = *this - o;
  return *this;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  return TruncatedSeries(p_.scaled(c), caps_);
}

TruncatedSeries TruncatedSeries::mul_poly(const Poly& q) const {
  return TruncatedSeries(p_.times(q, &caps_), caps_);
}

TruncatedSeries TruncatedSeries::mul_term(const Monomial& m, const Rational& c) const {
  return TruncatedSeries(p_.mul_term(m, c, &caps_), caps_);
}

TruncatedSeries TruncatedSeries::mul_var(const std::string& name, int exp) const {
  Monomial m = Monomial::unit(ring()->arity());
  m.e[ring()->index(name)] = static_cast<std::int16_t>(exp);
  return mul_term(m, Rational(1));
}

TruncatedSeries TruncatedSeries::pow(int k) const {
  return TruncatedSeries(p_.pow(k, &caps_), caps_);
}

TruncatedSeries TruncatedSeries::truncated_to(const Caps& caps) const {
  return TruncatedSeries(p_, caps);
}

TruncatedSeries TruncatedSeries::substitute(const std::map<std::string, Poly>& values) const {
  return TruncatedSeries(p_.substitute(values, &caps_), caps_);
}

TruncatedSeries TruncatedSeries::invert(const Poly::Term* unit_hint) const {
  if (p_.is_zero()) throw NotInvertibleError("cannot invert zero series");
  Poly::Term unit = unit_hint ? *unit_hint : p_.terms().back();
  if (hmap::is_zero(unit.second)) throw NotInvertibleError("zero unit part");
  // r = 1 - s/unit; s^{-1} = (sum_k r^k)/unit
  Poly scaled_self = p_.mul_term(unit.first.power(-1), 1 / unit.second, &caps_);
  Poly r = Poly::constant(ring(), 1) - scaled_self;
  Poly acc = Poly::constant(ring(), 1);
  Poly power = Poly::constant(ring(), 1);
  int guard = 4096;
  while (!power.is_zero()) {
    if (guard-- == 0) throw NotInvertibleError("series not truncation-nilpotent under caps");
    power = power.times(r, &caps_);
    acc += power;
  }
  acc = acc.mul_term(unit.first.power(-1), 1 / unit.second, &caps_);
  return TruncatedSeries(std::move(acc), caps_);
}

std::map<int, TruncatedSeries> TruncatedSeries::coeffs_in(const std::string& var) const {
  std::map<int, TruncatedSeries> out;
  for (auto& [k, q] : p_.collect(var)) out.emplace(k, TruncatedSeries(std::move(q), caps_));
  return out;
}

TruncatedSeries TruncatedSeries::coeff_of(const std::string& var, int k) const {
  return TruncatedSeries(p_.coeff_of(var, k), caps_);
}

}  // namespace hmap
