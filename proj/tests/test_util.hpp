#pragma once

#include <cstdint>
#include <vector>

#include "hmap/poly.hpp"

namespace hmap::testutil {

/// Deterministic generator for property tests (splitmix64 core).
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t x = (state += 0x9e3779b97f4a7c15ull);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }
  /// Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(long hi = 9, long den_hi = 4) {
    Rational r(range(-hi, hi), range(1, den_hi));
    r.canonicalize();
    return r;
  }
  /// Nonzero rational, numerator height <= hi.
  Rational rational_nonzero(long hi = 9, long den_hi = 4) {
    for (;;) {
      Rational r = rational(hi, den_hi);
      if (sgn(r) != 0) return r;
    }
  }
};

/// Random sparse polynomial: up to n_terms, per-variable exponents in
/// [emin, emax].
inline Poly random_poly(Rng& rng, const RingPtr& ring, int n_terms, int emin, int emax) {
  std::vector<Poly::Term> ts;
  for (int i = 0; i < n_terms; ++i) {
    Monomial m = Monomial::unit(ring->arity());
    for (std::size_t v = 0; v < ring->arity(); ++v)
      m.e[v] = static_cast<std::int16_t>(rng.range(emin, emax));
    ts.emplace_back(m, rng.rational());
  }
  return Poly::from_terms(ring, std::move(ts));
}

/// Leibniz-formula determinant: the independent cross-check route for
/// fraction_free_det (O(n!), keep n small).
template <typename T>
T leibniz_det(const std::vector<std::vector<T>>& m, const T& zero) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  T acc = zero;
  // Iterate permutations with parity tracking.
  std::vector<std::size_t> c(n, 0);
  int parity = 1;
  auto add_term = [&]() {
    T prod = m[0][perm[0]];
    for (std::size_t i = 1; i < n; ++i) prod = prod * m[i][perm[i]];
    if (parity > 0)
      acc = acc + prod;
    else
      acc = acc - prod;
  };
  add_term();
  std::size_t i = 0;
  while (i < n) {
    if (c[i] < i) {
      std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
      parity = -parity;
      add_term();
      ++c[i];
      i = 0;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  return acc;
}

}  // namespace hmap::testutil
