#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmap/ring.hpp"

namespace hmap {

struct RingMismatchError : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct NotInvertibleError : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Per-variable upper bounds on exponents.  A monomial is kept iff
/// exp(v) <= bound(v) for every capped v.  Lower bounds are never
/// enforced here; callers that shift by negative powers (c = cinv^-1)
/// must budget their own headroom.
struct Caps {
  static constexpr std::int32_t kNone = INT32_MAX;

  RingPtr ring;
  std::vector<std::int32_t> bound;

  Caps() = default;
  static Caps none(RingPtr r);
  Caps& set(const std::string& var, std::int32_t v);
  std::int32_t get(const std::string& var) const;
  bool admits(const Monomial& m) const;
  bool any() const;
  /// Componentwise minimum; rings must match.
  static Caps meet(const Caps& a, const Caps& b);
  bool operator==(const Caps& o) const;
};

/// Sparse multivariate Laurent polynomial with exact rational
/// coefficients.  Terms are kept sorted in descending graded-lex order
/// with no zero coefficients; that form is canonical and drives all
/// serialization and equality.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;

  static Poly zero(RingPtr r);
  static Poly constant(RingPtr r, Rational c);
  static Poly var(RingPtr r, const std::string& name, int exp = 1);
  static Poly term(RingPtr r, Monomial m, Rational c);
  static Poly from_terms(RingPtr r, std::vector<Term> ts);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant coefficient (coefficient of the unit monomial).
  Rational constant_value() const;
  std::size_t size() const { return terms_.size(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly times(const Poly& o, const Caps* caps) const;
  Poly scaled(const Rational& c) const;
  Poly mul_term(const Monomial& m, const Rational& c, const Caps* caps = nullptr) const;
  Poly pow(int k, const Caps* caps = nullptr) const;  // k >= 0
  Poly truncated(const Caps& caps) const;

  int degree_in(std::size_t var) const;      // max exponent, 0 for zero poly
  int min_degree_in(std::size_t var) const;  // min exponent, 0 for zero poly
  int degree_in(const std::string& var) const;
  int min_degree_in(const std::string& var) const;

  /// Coefficient of var^k, as a polynomial with that variable's slot
  /// zeroed out.
  Poly coeff_of(std::size_t var, int k) const;
  Poly coeff_of(const std::string& var, int k) const;
  /// All coefficients keyed by exponent of var.
  std::map<int, Poly> collect(const std::string& var) const;

  Poly derivative(const std::string& var) const;

  /// Simultaneous substitution of the listed variables.  Values must
  /// live in this ring.  Negative exponents of a substituted variable
  /// require its value to be a single invertible term.
  Poly substitute(const std::map<std::string, Poly>& values, const Caps* caps = nullptr) const;
  Poly substitute_rationals(const std::map<std::string, Rational>& values) const;

  /// Gcd of coefficients with the sign of the leading term; zero poly
  /// has content 0.
  Rational content() const;
  Poly primitive_part() const;
  /// Componentwise minimum exponent vector over all terms.
  Monomial monomial_content() const;

  /// Exact division; nullopt when the divisor does not divide exactly.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  /// Re-express in a ring containing (at least) every variable that
  /// appears; unknown-in-target variables with nonzero exponent throw.
  Poly lift(const RingPtr& target) const;

  const Term& leading_term() const;  // max in graded-lex; throws on zero

  std::string to_string() const;

 private:
  void normalize();  // sort + merge + drop zeros
  RingPtr ring_;
  std::vector<Term> terms_;
};

Poly operator*(const Rational& c, const Poly& p);

}  // namespace hmap
