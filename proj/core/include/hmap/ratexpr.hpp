#pragma once

#include <optional>
#include <vector>

#include "hmap/poly.hpp"

namespace hmap {

/// Quotient of two polynomials over a parameter ring.  Reduction by
/// rational and monomial content is mandatory; full gcd reduction is
/// best-effort (cheap exact-division probes), exactness never depends
/// on it.
class RationalExpr {
 public:
  RationalExpr() = default;
  explicit RationalExpr(Poly num);
  RationalExpr(Poly num, Poly den);

  static RationalExpr zero(const RingPtr& r);
  static RationalExpr constant(const RingPtr& r, const Rational& c);
  static RationalExpr var(const RingPtr& r, const std::string& name, int exp = 1);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalExpr operator-() const;
  RationalExpr operator+(const RationalExpr& o) const;
  RationalExpr operator-(const RationalExpr& o) const;
  RationalExpr operator*(const RationalExpr& o) const;
  RationalExpr operator/(const RationalExpr& o) const;

  /// ad == bc (exact cross-multiplication).
  bool equals(const RationalExpr& o) const;

  RationalExpr derivative(const std::string& var) const;
  RationalExpr substitute(const std::map<std::string, Poly>& values) const;
  std::optional<Rational> eval(const std::map<std::string, Rational>& values) const;

  /// Sign of the leading rational of num times that of den.
  int lead_sign() const;

  std::string to_string() const;

 private:
  void normalize();
  Poly num_, den_;
};

/// Dense univariate polynomial over the fraction field; the main
/// variable is positional (no name).  Backs gcd / squarefree / Yun /
/// square-root work in the elimination pipelines.
class FieldPoly {
 public:
  FieldPoly() = default;
  explicit FieldPoly(std::vector<RationalExpr> coeffs);
  static FieldPoly zero();
  static FieldPoly from_poly(const Poly& p, const std::string& var);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  RationalExpr coeff(int k) const;
  const RationalExpr& lc() const;
  const std::vector<RationalExpr>& coeffs() const { return c_; }

  FieldPoly operator+(const FieldPoly& o) const;
  FieldPoly operator-(const FieldPoly& o) const;
  FieldPoly operator*(const FieldPoly& o) const;
  FieldPoly scaled(const RationalExpr& s) const;

  FieldPoly derivative() const;
  FieldPoly monic() const;

  /// Euclidean division; remainder has smaller degree.
  static std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b);
  static FieldPoly gcd_monic(const FieldPoly& a, const FieldPoly& b);
  FieldPoly exact_div(const FieldPoly& d) const;  // throws if remainder != 0

  /// f / gcd(f, f'), monic.
  FieldPoly squarefree_part() const;
  /// Yun: f = lc * prod out[i]^(i+1), each factor monic & squarefree.
  std::vector<FieldPoly> yun_decomposition() const;
  /// Product of the odd-multiplicity factors, monic (the square-free
  /// cofactor left after removing the maximal square).
  FieldPoly odd_part() const;

  std::optional<FieldPoly> exact_sqrt() const;

  RationalExpr eval(const RationalExpr& x) const;

  /// Clears denominators: returns the primitive Poly in `var` (times
  /// an unrecorded unit of the field).
  Poly to_poly_cleared(const std::string& var) const;

  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<RationalExpr> c_;  // c_[k] is the coefficient of X^k
};

}  // namespace hmap
