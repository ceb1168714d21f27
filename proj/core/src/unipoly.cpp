#include "hmap/unipoly.hpp"

#include <algorithm>

#include "hmap/determinant.hpp"

namespace hmap {

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::from_poly(const Poly& p, const std::string& var) {
  UniPoly u;
  u.ring_ = p.ring();
  u.var_ = var;
  if (p.is_zero()) return u;
  if (p.min_degree_in(var) < 0)
    throw AlgebraError("UniPoly: negative exponent in main variable " + var);
  u.c_.assign(static_cast<std::size_t>(p.degree_in(var)) + 1, Poly::zero(p.ring()));
  for (auto& [k, q] : p.collect(var)) u.c_[static_cast<std::size_t>(k)] = q;
  u.trim();
  return u;
}

Poly UniPoly::to_poly() const {
  Poly out = Poly::zero(ring_);
  for (std::size_t k = 0; k < c_.size(); ++k)
    out += c_[k] * Poly::var(ring_, var_, static_cast<int>(k));
  return out;
}

const Poly& UniPoly::lc() const {
  if (c_.empty()) throw AlgebraError("UniPoly::lc of zero polynomial");
  return c_.back();
}

Poly UniPoly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Poly::zero(ring_);
  return c_[static_cast<std::size_t>(k)];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r = *this;
  if (o.c_.size() > r.c_.size()) r.c_.resize(o.c_.size(), Poly::zero(ring_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) r.c_[k] += o.c_[k];
  r.trim();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  UniPoly r = *this;
  if (o.c_.size() > r.c_.size()) r.c_.resize(o.c_.size(), Poly::zero(ring_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) r.c_[k] -= o.c_[k];
  r.trim();
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  UniPoly r;
  r.ring_ = ring_;
  r.var_ = var_;
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Poly::zero(ring_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

UniPoly UniPoly::scaled(const Poly& s) const {
  UniPoly r = *this;
  for (auto& q : r.c_) q = q * s;
  r.trim();
  return r;
}

UniPoly UniPoly::shifted(int k) const {
  if (k < 0) throw AlgebraError("UniPoly::shifted by negative power");
  UniPoly r = *this;
  if (!r.c_.empty()) r.c_.insert(r.c_.begin(), static_cast<std::size_t>(k), Poly::zero(ring_));
  return r;
}

UniPoly UniPoly::derivative() const {
  UniPoly r;
  r.ring_ = ring_;
  r.var_ = var_;
  for (std::size_t k = 1; k < c_.size(); ++k)
    r.c_.push_back(c_[k].scaled(Rational(static_cast<long>(k))));
  r.trim();
  return r;
}

std::optional<UniPoly> UniPoly::divide_coeffs_exact(const Poly& d) const {
  UniPoly r = *this;
  for (auto& q : r.c_) {
    auto e = q.divide_exact(d);
    if (!e) return std::nullopt;
    q = *e;
  }
  return r;
}

UniPoly UniPoly::prem(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw AlgebraError("prem by zero polynomial");
  const int e = g.degree();
  if (f.degree() < e) return f;
  const Poly& l = g.lc();
  UniPoly r = f;
  int pending = f.degree() - e + 1;
  while (!r.is_zero() && r.degree() >= e) {
    const int shift = r.degree() - e;
    const Poly top = r.lc();
    r = r.scaled(l) - g.shifted(shift).scaled(top);
    --pending;
    if (!r.is_zero() && r.degree() >= e + shift)
      throw AlgebraError("prem: degree failed to drop");
  }
  // Pad so exactly lc(g)^(deg f - deg g + 1) multiplies f overall.
  Poly pad = Poly::constant(f.ring_, 1);
  for (int i = 0; i < pending; ++i) pad = pad * l;
  return r.scaled(pad);
}

namespace {

Poly poly_power(const Poly& p, int k) {
  Poly r = Poly::constant(p.ring(), 1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

Poly exact_quotient(const Poly& num, const Poly& den, const char* where) {
  auto q = num.divide_exact(den);
  if (!q) throw AlgebraError(std::string("subresultant PRS: inexact division in ") + where);
  return *q;
}

}  // namespace

Poly UniPoly::resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw AlgebraError("resultant of the zero polynomial is undefined");
  if (f.var() != g.var() || !f.ring()->same_as(*g.ring()))
    throw AlgebraError("resultant: operands disagree on variable or ring");
  const RingPtr& R = f.ring();
  const Poly one = Poly::constant(R, 1);

  UniPoly A = f, B = g;
  Rational sign(1);
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((f.degree() % 2) == 1 && (g.degree() % 2) == 1) sign = -sign;
  }
  if (B.degree() == 0) return poly_power(B.lc(), A.degree()).scaled(sign);

  Poly gprev = one, h = one;
  while (true) {
    const int da = A.degree(), db = B.degree();
    const int delta = da - db;
    if ((da % 2) == 1 && (db % 2) == 1) sign = -sign;
    UniPoly Rm = prem(A, B);
    A = B;
    const Poly divisor = gprev * poly_power(h, delta);
    auto next = Rm.divide_coeffs_exact(divisor);
    if (!next) throw AlgebraError("subresultant PRS: inexact remainder division");
    B = *next;
    gprev = A.lc();
    h = (delta == 0) ? h : exact_quotient(poly_power(gprev, delta), poly_power(h, delta - 1), "h update");
    if (B.is_zero()) return Poly::zero(R);
    if (B.degree() == 0) break;
  }
  // Resultant = sign * lc(B)^deg(A) / h^(deg(A)-1).
  const int da = A.degree();
  Poly out = exact_quotient(poly_power(B.lc(), da), poly_power(h, da - 1), "final step");
  return out.scaled(sign);
}

Poly UniPoly::resultant_sylvester(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw AlgebraError("resultant of the zero polynomial is undefined");
  if (f.var() != g.var() || !f.ring()->same_as(*g.ring()))
    throw AlgebraError("resultant: operands disagree on variable or ring");
  const RingPtr& R = f.ring();
  const int m = f.degree(), n = g.degree();
  const std::size_t N = static_cast<std::size_t>(m + n);
  if (N == 0) return Poly::constant(R, 1);
  const Poly zero = Poly::zero(R), one = Poly::constant(R, 1);
  std::vector<std::vector<Poly>> mat(N, std::vector<Poly>(N, zero));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g.coeff(n - k);
  return fraction_free_det(mat, zero, one);
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn) / Rational(rd);
}

std::optional<Poly> sqrt_nonneg_exponents(const Poly& f) {
  const RingPtr& R = f.ring();
  if (f.is_constant()) {
    auto r = rational_sqrt(f.constant_value());
    if (!r) return std::nullopt;
    return Poly::constant(R, *r);
  }
  std::size_t v = 0;
  int best = 0;
  for (std::size_t i = 0; i < R->arity(); ++i) {
    const int d = f.degree_in(i);
    if (d > best) {
      best = d;
      v = i;
    }
  }
  if (best % 2 != 0) return std::nullopt;
  const int m = best / 2;
  const std::string& vname = R->names()[v];
  std::vector<Poly> fk(static_cast<std::size_t>(best) + 1, Poly::zero(R));
  for (auto& [k, q] : f.collect(vname)) {
    if (k < 0) return std::nullopt;
    fk[static_cast<std::size_t>(k)] = q;
  }
  std::vector<Poly> gk(static_cast<std::size_t>(m) + 1, Poly::zero(R));
  auto top = sqrt_nonneg_exponents(fk[static_cast<std::size_t>(best)]);
  if (!top) return std::nullopt;
  gk[static_cast<std::size_t>(m)] = *top;
  const Poly twice_top = gk[static_cast<std::size_t>(m)].scaled(Rational(2));
  for (int j = m - 1; j >= 0; --j) {
    Poly rhs = fk[static_cast<std::size_t>(m + j)];
    for (int i = j + 1; i <= m - 1; ++i) rhs -= gk[static_cast<std::size_t>(i)] * gk[static_cast<std::size_t>(m + j - i)];
    auto q = rhs.divide_exact(twice_top);
    if (!q) return std::nullopt;
    gk[static_cast<std::size_t>(j)] = *q;
  }
  Poly g = Poly::zero(R);
  for (int k = 0; k <= m; ++k) g += gk[static_cast<std::size_t>(k)] * Poly::var(R, vname, k);
  if (g * g != f) return std::nullopt;  // low-order coefficients can still disagree
  return g;
}

}  // namespace

std::optional<Poly> poly_exact_sqrt(const Poly& f) {
  if (f.is_zero()) return f;
  const Monomial mc = f.monomial_content();
  Monomial half = Monomial::unit(f.ring()->arity());
  for (std::size_t i = 0; i < mc.e.size(); ++i) {
    if (mc.e[i] % 2 != 0) return std::nullopt;
    half.e[i] = static_cast<std::int16_t>(mc.e[i] / 2);
  }
  const Poly body = f.mul_term(Monomial::unit(f.ring()->arity()).over(mc), Rational(1));
  auto g = sqrt_nonneg_exponents(body);
  if (!g) return std::nullopt;
  Poly out = g->mul_term(half, Rational(1));
  if (!out.is_zero() && sgn(out.leading_term().second) < 0) out = -out;
  return out;
}

}  // namespace hmap
