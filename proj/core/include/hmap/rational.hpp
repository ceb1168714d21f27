#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hmap {

/// Exact arbitrary-precision rational, always stored reduced with a
/// positive denominator.  All arithmetic in the library goes through
/// this type; there is no floating point anywhere.
using Rational = mpq_class;

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
Rational rational_from_string(const std::string& s);

/// Canonical form: "p" when q == 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

std::size_t rational_hash(const Rational& r);

}  // namespace hmap
