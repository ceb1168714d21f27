#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hmap/rational.hpp"

namespace hmap {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// An ordered list of variable names.  Monomial exponent vectors are
/// indexed by position in this list; the order also fixes the
/// graded-lex term order and every canonical serialization.
class Ring {
 public:
  static RingPtr make(std::vector<std::string> names);

  std::size_t arity() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a variable; throws if absent.
  std::size_t index(const std::string& name) const;
  bool has(const std::string& name) const;

  /// Structural equality (same names in the same order).
  bool same_as(const Ring& other) const { return names_ == other.names_; }

  /// A ring extending this one with extra variables appended.
  RingPtr extended(const std::vector<std::string>& extra) const;

 private:
  explicit Ring(std::vector<std::string> names);
  std::vector<std::string> names_;
};

/// Exponent vector over an ambient ring.  Exponents are signed: the
/// inverse of a variable v is represented as v^-1 (used for c = cinv^-1
/// and the catalytic variables x = xinv^-1, omega = winv^-1, ...).
struct Monomial {
  std::vector<std::int16_t> e;

  static Monomial unit(std::size_t arity) { return Monomial{std::vector<std::int16_t>(arity, 0)}; }

  int degree() const;                 // sum of exponents (signed)
  int exp(std::size_t i) const { return e[i]; }
  bool is_unit() const;

  Monomial times(const Monomial& o) const;
  Monomial over(const Monomial& o) const;
  Monomial power(int k) const;

  bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Graded-lex: higher total degree first, ties broken lexicographically
/// by exponent vector (earlier variables weigh more).  Total order.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

}  // namespace hmap
