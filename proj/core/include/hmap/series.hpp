#pragma once

#include <map>
#include <string>

#include "hmap/poly.hpp"

namespace hmap {

/// A polynomial together with the per-variable caps it is truncated
/// to.  The universal grading variable is cinv (exponent = edge
/// count); catalytic expansions add capped inverse variables (xinv,
/// winv, ...).  Exponents are signed, so c = cinv^-1 and x = xinv^-1
/// live in the same ring; exactness across such shifts is the
/// caller's responsibility (compute with buffered caps, truncate at
/// the end).
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(Poly p, Caps caps);

  static TruncatedSeries zero(const Caps& caps);
  static TruncatedSeries constant(const Caps& caps, Rational c);
  static TruncatedSeries var(const Caps& caps, const std::string& name, int exp = 1);

  const Poly& poly() const { return p_; }
  const Caps& caps() const { return caps_; }
  const RingPtr& ring() const { return p_.ring(); }
  bool is_zero() const { return p_.is_zero(); }

  TruncatedSeries operator-() const;
  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);

  /// Equality of term sets (rings must match; caps are not compared).
  bool operator==(const TruncatedSeries& o) const { return p_ == o.p_; }
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

  TruncatedSeries scaled(const Rational& c) const;
  TruncatedSeries mul_poly(const Poly& q) const;
  TruncatedSeries mul_term(const Monomial& m, const Rational& c) const;
  TruncatedSeries mul_var(const std::string& name, int exp) const;
  TruncatedSeries pow(int k) const;  // k >= 0
  TruncatedSeries truncated_to(const Caps& caps) const;

  TruncatedSeries substitute(const std::map<std::string, Poly>& values) const;

  /// Multiplicative inverse as a truncated series.  The unit part is
  /// the given term (or the minimal graded-lex term when absent); the
  /// remainder must be truncation-nilpotent under the caps.
  TruncatedSeries invert(const Poly::Term* unit_hint = nullptr) const;

  /// Coefficients keyed by the exponent of one variable (that slot
  /// zeroed in the results).
  std::map<int, TruncatedSeries> coeffs_in(const std::string& var) const;
  TruncatedSeries coeff_of(const std::string& var, int k) const;

  std::string to_string() const { return p_.to_string(); }

 private:
  Poly p_;
  Caps caps_;
};

}  // namespace hmap
