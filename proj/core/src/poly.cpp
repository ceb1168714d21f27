#include "hmap/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace hmap {

namespace {
void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b || !a->same_as(*b)) throw RingMismatchError("incompatible rings");
}
}  // namespace

Caps Caps::none(RingPtr r) {
  Caps c;
  c.ring = std::move(r);
  c.bound.assign(c.ring->arity(), kNone);
  return c;
}

Caps& Caps::set(const std::string& var, std::int32_t v) {
  bound[ring->index(var)] = v;
  return *this;
}

std::int32_t Caps::get(const std::string& var) const { return bound[ring->index(var)]; }

bool Caps::admits(const Monomial& m) const {
  for (std::size_t i = 0; i < bound.size(); ++i)
    if (bound[i] != kNone && m.e[i] > bound[i]) return false;
  return true;
}

bool Caps::any() const {
  for (auto b : bound)
    if (b != kNone) return true;
  return false;
}

Caps Caps::meet(const Caps& a, const Caps& b) {
  require_same_ring(a.ring, b.ring);
  Caps c = a;
  for (std::size_t i = 0; i < c.bound.size(); ++i) c.bound[i] = std::min(c.bound[i], b.bound[i]);
  return c;
}

bool Caps::operator==(const Caps& o) const {
  return ring && o.ring && ring->same_as(*o.ring) && bound == o.bound;
}

Poly Poly::zero(RingPtr r) {
  Poly p;
  p.ring_ = std::move(r);
  return p;
}

Poly Poly::constant(RingPtr r, Rational c) {
  Poly p = zero(std::move(r));
  if (!hmap::is_zero(c)) p.terms_.push_back({Monomial::unit(p.ring_->arity()), std::move(c)});
  return p;
}

Poly Poly::var(RingPtr r, const std::string& name, int exp) {
  Poly p = zero(std::move(r));
  Monomial m = Monomial::unit(p.ring_->arity());
  m.e[p.ring_->index(name)] = static_cast<std::int16_t>(exp);
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

Poly Poly::term(RingPtr r, Monomial m, Rational c) {
  Poly p = zero(std::move(r));
  if (m.e.size() != p.ring_->arity()) throw RingMismatchError("monomial arity mismatch");
  if (!hmap::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(RingPtr r, std::vector<Term> ts) {
  Poly p = zero(std::move(r));
  p.terms_ = std::move(ts);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return monomial_less(b.first, a.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return hmap::is_zero(t.second); });
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit());
}

Rational Poly::constant_value() const {
  for (const auto& t : terms_)
    if (t.first.is_unit()) return t.second;
  return Rational(0);
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_ring(ring_, o.ring_);
  // merge two sorted-descending term lists
  Poly r = zero(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first == o.terms_[j].first) {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (!hmap::is_zero(c)) r.terms_.push_back({terms_[i].first, std::move(c)});
      ++i, ++j;
    } else if (monomial_less(o.terms_[j].first, terms_[i].first)) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly& Poly::operator+=(const Poly& o) {
  *this = *this + o;
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  *this = *this - o;
  return *this;
}

Poly Poly::operator*(const Poly& o) const { return times(o, nullptr); }

Poly Poly::times(const Poly& o, const Caps* caps) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return zero(ring_);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * 2);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma.times(mb);
      if (caps && !caps->admits(m)) continue;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), ca * cb);
      else
        it->second += ca * cb;
    }
  }
  Poly r = zero(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!hmap::is_zero(c)) r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return monomial_less(b.first, a.first); });
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) return false;
  return terms_ == o.terms_;
}

Poly Poly::scaled(const Rational& c) const {
  if (hmap::is_zero(c)) return zero(ring_);
  Poly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c, const Caps* caps) const {
  Poly p = zero(ring_);
  if (hmap::is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial mm = t.first.times(m);
    if (caps && !caps->admits(mm)) continue;
    p.terms_.push_back({std::move(mm), t.second * c});
  }
  // multiplying by a fixed monomial preserves the descending order
  return p;
}

Poly Poly::pow(int k, const Caps* caps) const {
  if (k < 0) throw AlgebraError("Poly::pow: negative exponent");
  Poly r = constant(ring_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r = r.times(base, caps);
    k >>= 1;
    if (k > 0) base = base.times(base, caps);
  }
  return r;
}

Poly Poly::truncated(const Caps& caps) const {
  require_same_ring(ring_, caps.ring);
  Poly p = zero(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    if (caps.admits(t.first)) p.terms_.push_back(t);
  return p;
}

int Poly::degree_in(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.first.e[var] > d) d = t.first.e[var];
    first = false;
  }
  return d;
}

int Poly::min_degree_in(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.first.e[var] < d) d = t.first.e[var];
    first = false;
  }
  return d;
}

int Poly::degree_in(const std::string& var) const { return degree_in(ring_->index(var)); }
int Poly::min_degree_in(const std::string& var) const { return min_degree_in(ring_->index(var)); }

Poly Poly::coeff_of(std::size_t var, int k) const {
  Poly p = zero(ring_);
  for (const auto& t : terms_) {
    if (t.first.e[var] != k) continue;
    Term u = t;
    u.first.e[var] = 0;
    p.terms_.push_back(std::move(u));
  }
  p.normalize();
  return p;
}

Poly Poly::coeff_of(const std::string& var, int k) const { return coeff_of(ring_->index(var), k); }

std::map<int, Poly> Poly::collect(const std::string& var) const {
  std::size_t v = ring_->index(var);
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Term u = t;
    int k = u.first.e[v];
    u.first.e[v] = 0;
    buckets[k].push_back(std::move(u));
  }
  std::map<int, Poly> out;
  for (auto& [k, ts] : buckets) out.emplace(k, from_terms(ring_, std::move(ts)));
  return out;
}

Poly Poly::derivative(const std::string& var) const {
  std::size_t v = ring_->index(var);
  Poly p = zero(ring_);
  for (const auto& t : terms_) {
    int k = t.first.e[v];
    if (k == 0) continue;
    Term u = t;
    u.second *= k;
    u.first.e[v] = static_cast<std::int16_t>(k - 1);
    p.terms_.push_back(std::move(u));
  }
  p.normalize();
  return p;
}

Poly Poly::substitute(const std::map<std::string, Poly>& values, const Caps* caps) const {
  std::vector<const Poly*> vals(ring_->arity(), nullptr);
  for (const auto& [name, val] : values) {
    require_same_ring(ring_, val.ring());
    vals[ring_->index(name)] = &val;
  }

  // Carrier monomials (the non-substituted part of each term) may have
  // negative exponents in capped variables; widen the working caps by
  // the largest such shift so the final shifted products are exact at
  // the requested caps.
  Caps widened;
  const Caps* work = caps;
  if (caps) {
    widened = *caps;
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < ring_->arity(); ++i) {
        if (vals[i]) continue;  // substituted slots vanish from the carrier
        if (t.first.e[i] < 0 && caps->bound[i] != Caps::kNone) {
          std::int64_t need = std::int64_t(caps->bound[i]) - t.first.e[i];
          if (need > widened.bound[i]) widened.bound[i] = static_cast<std::int32_t>(need);
        }
      }
    }
    work = &widened;
  }

  // cache of powers per substituted variable
  std::vector<std::map<int, Poly>> powers(ring_->arity());
  auto power_of = [&](std::size_t v, int k) -> const Poly& {
    auto& cache = powers[v];
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    Poly result = zero(ring_);
    if (k >= 0) {
      result = vals[v]->pow(k, work);
    } else {
      // need an invertible single-term value
      if (vals[v]->size() != 1) throw NotInvertibleError("substitute: negative power of a non-monomial value");
      const auto& t = vals[v]->terms()[0];
      Monomial m = t.first.power(k);  // negative power of the monomial
      Rational c(1);
      Rational base = t.second;
      for (int i = 0; i < -k; ++i) c /= base;
      result = term(ring_, std::move(m), std::move(c));
    }
    return cache.emplace(k, std::move(result)).first->second;
  };

  Poly acc = zero(ring_);
  for (const auto& t : terms_) {
    Monomial rest = t.first;
    Poly piece = constant(ring_, t.second);
    for (std::size_t v = 0; v < ring_->arity(); ++v) {
      if (!vals[v] || t.first.e[v] == 0) continue;
      int k = t.first.e[v];
      rest.e[v] = 0;
      piece = piece.times(power_of(v, k), work);
      if (piece.is_zero()) break;
    }
    if (piece.is_zero()) continue;
    piece = piece.mul_term(rest, Rational(1), caps);
    acc += piece;
  }
  return acc;
}

Poly Poly::substitute_rationals(const std::map<std::string, Rational>& values) const {
  std::map<std::string, Poly> vals;
  for (const auto& [name, v] : values) {
    if (hmap::is_zero(v)) {
      // zero is fine for non-negative exponents; substitute() handles
      // positive powers; negative powers of zero must throw
      for (const auto& t : terms_)
        if (t.first.e[ring_->index(name)] < 0)
          throw NotInvertibleError("substitute: negative power of zero");
    }
    vals.emplace(name, constant(ring_, v));
  }
  // negative exponents of a nonzero constant: handled via single-term path
  return substitute(vals, nullptr);
}

Rational Poly::content() const {
  if (terms_.empty()) return Rational(0);
  // gcd of |num|, lcm-free: use gcd over numerators / lcm of denominators
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_class n = t.second.get_num();
    mpz_class d = t.second.get_den();
    num_gcd = gcd(num_gcd, abs(n));
    den_lcm = lcm(den_lcm, d);
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (sgn(terms_.front().second) < 0) c = -c;
  return c;
}

Poly Poly::primitive_part() const {
  Rational c = content();
  if (hmap::is_zero(c)) return *this;
  Rational inv = 1 / c;
  return scaled(inv);
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return Monomial::unit(ring_->arity());
  Monomial m = terms_[0].first;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::min(m.e[i], t.first.e[i]);
  return m;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  require_same_ring(ring_, divisor.ring_);
  if (divisor.is_zero()) throw AlgebraError("division by zero polynomial");
  Poly r = *this;
  Poly q = zero(ring_);
  const Term& dl = divisor.leading_term();
  if (is_zero()) return q;

  // Quotients may be Laurent (x^2+1 over x gives x + x^-1).  Any
  // exact quotient monomial must fit the per-variable box
  // [min(f)-max(d), max(f)-min(d)]: the extreme slices of q*d in each
  // variable are products of nonzero polynomials and survive into f.
  // Leaving the box proves inexactness and stops the descent early.
  const std::size_t n = ring_->arity();
  std::vector<std::int32_t> lo(n), hi(n);
  for (std::size_t v = 0; v < n; ++v) {
    lo[v] = min_degree_in(v) - divisor.degree_in(v);
    hi[v] = degree_in(v) - divisor.min_degree_in(v);
  }

  std::size_t guard = 4u * (terms_.size() + 16u) * (divisor.terms_.size() + 16u) + 1000000u;
  try {
    while (!r.is_zero()) {
      if (guard-- == 0) return std::nullopt;
      Monomial lead = r.leading_term().first;  // copy; the subtraction below invalidates references into r
      Monomial qm = lead.over(dl.first);
      for (std::size_t v = 0; v < n; ++v)
        if (qm.e[v] < lo[v] || qm.e[v] > hi[v]) return std::nullopt;
      Rational qc = r.leading_term().second / dl.second;
      q += term(ring_, qm, qc);
      r -= divisor.mul_term(qm, qc);
      if (!r.is_zero() && !monomial_less(r.leading_term().first, lead)) return std::nullopt;
    }
  } catch (const AlgebraError&) {
    return std::nullopt;
  }
  return q;
}

Poly Poly::lift(const RingPtr& target) const {
  Poly p = zero(target);
  std::vector<int> map_idx(ring_->arity(), -1);
  for (std::size_t i = 0; i < ring_->arity(); ++i)
    if (target->has(ring_->name(i))) map_idx[i] = static_cast<int>(target->index(ring_->name(i)));
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = Monomial::unit(target->arity());
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      if (t.first.e[i] == 0) continue;
      if (map_idx[i] < 0)
        throw RingMismatchError("lift: variable " + ring_->name(i) + " missing in target ring");
      m.e[map_idx[i]] = t.first.e[i];
    }
    p.terms_.push_back({std::move(m), t.second});
  }
  p.normalize();
  return p;
}

const Poly::Term& Poly::leading_term() const {
  if (terms_.empty()) throw AlgebraError("leading term of zero polynomial");
  return terms_.front();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    bool printed = false;
    if (!is_one(a) || m.is_unit()) {
      os << rational_to_string(a);
      printed = true;
    }
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (printed) os << "*";
      os << ring_->name(i);
      if (m.e[i] != 1) os << "^" << m.e[i];
      printed = true;
    }
  }
  return os.str();
}

Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

}  // namespace hmap
