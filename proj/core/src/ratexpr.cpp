#include "hmap/ratexpr.hpp"

#include <sstream>

#include "hmap/unipoly.hpp"

namespace hmap {

RationalExpr::RationalExpr(Poly num) : num_(std::move(num)) {
  den_ = Poly::constant(num_.ring(), 1);
  normalize();
}

RationalExpr::RationalExpr(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw AlgebraError("rational expression with zero denominator");
  normalize();
}

RationalExpr RationalExpr::zero(const RingPtr& r) { return RationalExpr(Poly::zero(r)); }

RationalExpr RationalExpr::constant(const RingPtr& r, const Rational& c) {
  return RationalExpr(Poly::constant(r, c));
}

RationalExpr RationalExpr::var(const RingPtr& r, const std::string& name, int exp) {
  return RationalExpr(Poly::var(r, name, exp));
}

void RationalExpr::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.ring(), 1);
    return;
  }
  // monomial content: cancel the shared part (keeps Laurent exponents tame)
  Monomial mn = num_.monomial_content();
  Monomial md = den_.monomial_content();
  Monomial common = mn;
  for (std::size_t i = 0; i < common.e.size(); ++i) common.e[i] = std::min(mn.e[i], md.e[i]);
  if (!common.is_unit()) {
    Monomial inv = common.power(-1);
    num_ = num_.mul_term(inv, Rational(1));
    den_ = den_.mul_term(inv, Rational(1));
  }
  // rational content: make den primitive with positive leading sign
  Rational dc = den_.content();
  den_ = den_.scaled(1 / dc);
  num_ = num_.scaled(1 / dc);
  Rational nc = num_.content();
  // best-effort: exact-division probes
  if (!den_.is_constant()) {
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = Poly::constant(num_.ring(), 1);
      return;
    }
    if (auto q = den_.divide_exact(num_.primitive_part())) {
      // num = nc * p, den = q * p  =>  num/den = nc / q
      den_ = std::move(*q);
      num_ = Poly::constant(den_.ring(), nc);
      Rational dc2 = den_.content();
      den_ = den_.scaled(1 / dc2);
      num_ = num_.scaled(1 / dc2);
      return;
    }
  }
}

RationalExpr RationalExpr::operator-() const {
  RationalExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalExpr RationalExpr::operator+(const RationalExpr& o) const {
  if (den_ == o.den_) return RationalExpr(num_ + o.num_, den_);
  return RationalExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalExpr RationalExpr::operator-(const RationalExpr& o) const { return *this + (-o); }

RationalExpr RationalExpr::operator*(const RationalExpr& o) const {
  return RationalExpr(num_ * o.num_, den_ * o.den_);
}

RationalExpr RationalExpr::operator/(const RationalExpr& o) const {
  if (o.is_zero()) throw AlgebraError("rational expression division by zero");
  return RationalExpr(num_ * o.den_, den_ * o.num_);
}

bool RationalExpr::equals(const RationalExpr& o) const { return num_ * o.den_ == o.num_ * den_; }

RationalExpr RationalExpr::derivative(const std::string& var) const {
  // (n/d)' = (n'd - nd')/d^2
  return RationalExpr(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RationalExpr RationalExpr::substitute(const std::map<std::string, Poly>& values) const {
  return RationalExpr(num_.substitute(values), den_.substitute(values));
}

std::optional<Rational> RationalExpr::eval(const std::map<std::string, Rational>& values) const {
  Poly n = num_.substitute_rationals(values);
  Poly d = den_.substitute_rationals(values);
  if (!n.is_constant() || !d.is_constant()) throw AlgebraError("eval: unassigned variables remain");
  Rational dv = d.constant_value();
  if (hmap::is_zero(dv)) return std::nullopt;
  return n.constant_value() / dv;
}

int RationalExpr::lead_sign() const {
  if (num_.is_zero()) return 0;
  return sgn(num_.leading_term().second) * sgn(den_.leading_term().second);
}

std::string RationalExpr::to_string() const {
  if (den_.is_constant() && is_one(den_.constant_value())) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

FieldPoly::FieldPoly(std::vector<RationalExpr> coeffs) : c_(std::move(coeffs)) { trim(); }

FieldPoly FieldPoly::zero() { return FieldPoly(); }

FieldPoly FieldPoly::from_poly(const Poly& p, const std::string& var) {
  if (p.is_zero()) return FieldPoly();
  int lo = p.min_degree_in(var);
  if (lo < 0) throw AlgebraError("FieldPoly::from_poly: negative exponents in main variable");
  std::vector<RationalExpr> c(static_cast<std::size_t>(p.degree_in(var)) + 1,
                              RationalExpr::zero(p.ring()));
  for (auto& [k, q] : p.collect(var)) c[static_cast<std::size_t>(k)] = RationalExpr(q);
  return FieldPoly(std::move(c));
}

void FieldPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RationalExpr FieldPoly::coeff(int k) const {
  if (c_.empty()) throw AlgebraError("coeff of zero FieldPoly needs a ring");
  if (k < 0 || k >= static_cast<int>(c_.size())) return RationalExpr::zero(c_.front().ring());
  return c_[static_cast<std::size_t>(k)];
}

const RationalExpr& FieldPoly::lc() const {
  if (c_.empty()) throw AlgebraError("leading coefficient of zero polynomial");
  return c_.back();
}

FieldPoly FieldPoly::operator+(const FieldPoly& o) const {
  std::vector<RationalExpr> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size() && i < o.c_.size())
      c[i] = c_[i] + o.c_[i];
    else if (i < c_.size())
      c[i] = c_[i];
    else
      c[i] = o.c_[i];
  }
  return FieldPoly(std::move(c));
}

FieldPoly FieldPoly::operator-(const FieldPoly& o) const {
  std::vector<RationalExpr> c(o.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -o.c_[i];
  return *this + FieldPoly(std::move(c));
}

FieldPoly FieldPoly::operator*(const FieldPoly& o) const {
  if (is_zero() || o.is_zero()) return FieldPoly();
  std::vector<RationalExpr> c(c_.size() + o.c_.size() - 1, RationalExpr::zero(c_.front().ring()));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
  return FieldPoly(std::move(c));
}

FieldPoly FieldPoly::scaled(const RationalExpr& s) const {
  std::vector<RationalExpr> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] * s;
  return FieldPoly(std::move(c));
}

FieldPoly FieldPoly::derivative() const {
  if (c_.size() <= 1) return FieldPoly();
  std::vector<RationalExpr> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    c[i - 1] = c_[i] * RationalExpr::constant(c_[i].ring(), Rational(static_cast<long>(i)));
  return FieldPoly(std::move(c));
}

FieldPoly FieldPoly::monic() const {
  if (is_zero()) return *this;
  RationalExpr inv = RationalExpr::constant(lc().ring(), 1) / lc();
  return scaled(inv);
}

std::pair<FieldPoly, FieldPoly> FieldPoly::divmod(const FieldPoly& a, const FieldPoly& b) {
  if (b.is_zero()) throw AlgebraError("FieldPoly division by zero");
  FieldPoly r = a;
  std::vector<RationalExpr> q(
      a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree()) + 1 : 0,
      RationalExpr::zero(b.lc().ring()));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    RationalExpr t = r.lc() / b.lc();
    int shift = r.degree() - b.degree();
    q[static_cast<std::size_t>(shift)] = t;
    // r -= t * X^shift * b
    std::vector<RationalExpr> sub(static_cast<std::size_t>(r.degree()) + 1,
                                  RationalExpr::zero(b.lc().ring()));
    for (int i = 0; i <= b.degree(); ++i) sub[static_cast<std::size_t>(i + shift)] = t * b.coeff(i);
    r = r - FieldPoly(std::move(sub));
    if (!r.is_zero() && r.degree() >= b.degree() + shift + 1)
      throw AlgebraError("FieldPoly divmod failed to reduce degree");
  }
  return {FieldPoly(std::move(q)), r};
}

FieldPoly FieldPoly::gcd_monic(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly f = a, g = b;
  while (!g.is_zero()) {
    auto [q, r] = divmod(f, g);
    f = g;
    g = r;
  }
  if (f.is_zero()) return f;
  return f.monic();
}

FieldPoly FieldPoly::exact_div(const FieldPoly& d) const {
  auto [q, r] = divmod(*this, d);
  if (!r.is_zero()) throw AlgebraError("FieldPoly exact_div: nonzero remainder");
  return q;
}

FieldPoly FieldPoly::squarefree_part() const {
  if (is_zero()) throw AlgebraError("squarefree part of zero polynomial");
  if (degree() == 0) return monic();
  FieldPoly g = gcd_monic(*this, derivative());
  return exact_div(g).monic();
}

std::vector<FieldPoly> FieldPoly::yun_decomposition() const {
  if (is_zero()) throw AlgebraError("Yun decomposition of zero polynomial");
  std::vector<FieldPoly> out;
  FieldPoly f = monic();
  if (f.degree() == 0) return out;
  FieldPoly fp = f.derivative();
  FieldPoly g = gcd_monic(f, fp);
  FieldPoly w = f.exact_div(g);
  FieldPoly y = fp.exact_div(g);
  FieldPoly z = y - w.derivative();
  while (true) {
    if (w.degree() == 0) break;
    FieldPoly h = gcd_monic(w, z).monic();
    out.push_back(h);
    w = w.exact_div(h);
    y = z.exact_div(h);
    z = y - w.derivative();
  }
  return out;
}

FieldPoly FieldPoly::odd_part() const {
  auto dec = yun_decomposition();
  RingPtr r = lc().ring();
  FieldPoly acc({RationalExpr::constant(r, 1)});
  for (std::size_t i = 0; i < dec.size(); ++i)
    if (i % 2 == 0) acc = acc * dec[i];  // dec[i] has multiplicity i+1
  return acc;
}

std::optional<FieldPoly> FieldPoly::exact_sqrt() const {
  if (is_zero()) return FieldPoly();
  if (degree() % 2 != 0) return std::nullopt;
  int m = degree() / 2;
  RingPtr ring = lc().ring();
  // leading coefficient must be a square of a rational times a square
  // in the field; take sqrt coefficientwise by the standard top-down
  // recurrence, then verify.
  // g_m^2 = c_{2m}: the leading coefficient needs exact square roots of
  // its numerator and denominator polynomials.
  auto nsq = poly_exact_sqrt(lc().num());
  auto dsq = poly_exact_sqrt(lc().den());
  if (!nsq || !dsq) return std::nullopt;
  std::vector<RationalExpr> g(static_cast<std::size_t>(m) + 1, RationalExpr::zero(ring));
  g[static_cast<std::size_t>(m)] = RationalExpr(*nsq, *dsq);
  RationalExpr two = RationalExpr::constant(ring, 2);
  for (int j = m - 1; j >= 0; --j) {
    // c_{m+j} = 2 g_m g_j + sum over pairs {i,k} with i+k = m+j, i,k < m
    RationalExpr acc = coeff(m + j);
    RationalExpr sum = RationalExpr::zero(ring);
    for (int i = j + 1; i <= m; ++i) {
      int k = m + j - i;
      if (i == m) continue;  // the unknown-term pair (m, j)
      if (k < 0 || k > m) continue;
      if (k == m) continue;
      if (k < i) continue;  // avoid double count; add symmetric factor below
      RationalExpr prod = g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(k)];
      if (k != i) prod = prod * two;
      sum = sum + prod;
    }
    acc = acc - sum;
    g[static_cast<std::size_t>(j)] = acc / (two * g[static_cast<std::size_t>(m)]);
  }
  FieldPoly root(std::move(g));
  FieldPoly check = root * root;
  FieldPoly diff = check - *this;
  if (!diff.is_zero()) return std::nullopt;
  if (root.lc().lead_sign() < 0) root = root.scaled(RationalExpr::constant(ring, -1));
  return root;
}

RationalExpr FieldPoly::eval(const RationalExpr& x) const {
  if (is_zero()) throw AlgebraError("eval of zero FieldPoly needs a ring");
  RationalExpr acc = RationalExpr::zero(c_.front().ring());
  for (int k = degree(); k >= 0; --k) acc = acc * x + c_[static_cast<std::size_t>(k)];
  return acc;
}

Poly FieldPoly::to_poly_cleared(const std::string& var) const {
  if (is_zero()) throw AlgebraError("to_poly_cleared of zero FieldPoly needs a ring");
  RingPtr r = c_.front().ring();
  Poly den = Poly::constant(r, 1);
  for (const auto& ce : c_) den = den * ce.den();
  Poly acc = Poly::zero(r);
  for (int k = 0; k <= degree(); ++k) {
    const auto& ce = c_[static_cast<std::size_t>(k)];
    auto q = den.divide_exact(ce.den());
    if (!q) throw AlgebraError("to_poly_cleared: denominator mismatch");
    acc += ce.num() * (*q) * Poly::var(r, var, k);
  }
  Rational content = acc.content();
  if (!hmap::is_zero(content)) acc = acc.scaled(1 / content);
  return acc;
}

std::string FieldPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (int k = degree(); k >= 0; --k) {
    if (c_[static_cast<std::size_t>(k)].is_zero()) continue;
    if (os.tellp() > 0) os << " + ";
    os << "(" << c_[static_cast<std::size_t>(k)].to_string() << ")";
    if (k > 0) os << "*" << var << "^" << k;
  }
  return os.str();
}

}  // namespace hmap
