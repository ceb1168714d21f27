#pragma once

#include <optional>
#include <vector>

#include "hmap/poly.hpp"

namespace hmap {

/// Univariate view of a multivariate polynomial: dense coefficient
/// vector in one designated ring variable, coefficients are
/// polynomials in the remaining variables.  Backs the fraction-free
/// elimination kit (pseudo-remainders, subresultant PRS resultants).
class UniPoly {
 public:
  UniPoly() = default;
  static UniPoly from_poly(const Poly& p, const std::string& var);
  Poly to_poly() const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Poly& lc() const;
  Poly coeff(int k) const;
  const RingPtr& ring() const { return ring_; }
  const std::string& var() const { return var_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Poly& s) const;
  UniPoly shifted(int k) const;  // times var^k
  UniPoly derivative() const;
  std::optional<UniPoly> divide_coeffs_exact(const Poly& d) const;

  /// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
  static UniPoly prem(const UniPoly& f, const UniPoly& g);

  /// Resultant by the subresultant PRS (fraction-free; exact interior
  /// divisions).  Errors on zero input.
  static Poly resultant(const UniPoly& f, const UniPoly& g);

  /// Resultant as the fraction-free determinant of the Sylvester
  /// matrix; independent route used to cross-check the PRS.
  static Poly resultant_sylvester(const UniPoly& f, const UniPoly& g);

 private:
  void trim();
  RingPtr ring_;
  std::string var_;
  std::vector<Poly> c_;  // c_[k] is the coefficient of var^k, var-free
};

/// Exact polynomial square root with deterministic sign (the leading
/// graded-lex coefficient of the root is a positive rational);
/// nullopt when the input is not a perfect square.
std::optional<Poly> poly_exact_sqrt(const Poly& f);

}  // namespace hmap
