#pragma once

#include <map>
#include <string>
#include <vector>

#include "hmap/genfun.hpp"

namespace hmap {

/// Carrier variables of the parameter-side expansions.  zbar = 1/z is
/// the uniformizer at z = infinity; xs = x/gamma and ys = y/gamma are
/// the scaled catalytic slots.  Scaling x and y by gamma keeps every
/// even-regime expression rational in u = gamma^2.
inline constexpr const char* kZBar = "zbar";
inline constexpr const char* kXS = "xs";
inline constexpr const char* kYS = "ys";

std::string alpha_name(int k);         // "al0", "al1", ...
std::string beta_name(int k);          // "be0", ...
std::string scaled_alpha_name(int k);  // "a0", ...
std::string scaled_beta_name(int k);   // "b0", ...

/// One-cut spectral data: x(z) = gamma z + sum_{k<dtilde} alpha_k z^-k,
/// y(z) = gamma/z + sum_{k<d} beta_k z^k.  Stored reduced: u = gamma^2
/// plus the ratios a_k = alpha_k/gamma and b_k = beta_k/gamma, so no
/// square root of u is ever needed.  Entries are either exact
/// (symbolic parameters, no caps) or capped series (solved curves).
struct SpectralParameters {
  int d = 0;
  int dtilde = 0;
  TruncatedSeries c;
  TruncatedSeries u;
  std::vector<TruncatedSeries> a;  // size dtilde
  std::vector<TruncatedSeries> b;  // size d

  const RingPtr& ring() const { return u.ring(); }
  /// The x <-> y exchange: a <-> b, d <-> dtilde.
  SpectralParameters mirrored() const;
};

/// Quartic even parameters as plain ring variables, unscaled flavor:
/// Q[c, g, al1, al3, be1, be3] with u = g^2 and a_k = al_k * g^-1.
/// `symmetric` reuses the al variables for the b side.
SpectralParameters symbolic_quartic_parameters(bool symmetric = false);
/// Scaled flavor: Q[c, u, a1, a3, b1, b3]; gamma does not exist here.
SpectralParameters symbolic_scaled_quartic_parameters(bool symmetric = false);

/// Couplings read off the two expansion conditions
///   V'(x(z))  + c y(z) = t/(gamma z) + O(z^-2)    (white side)
///   Vt'(y(z)) + c x(z) = t z/gamma  + O(z^2)      (black side)
/// solved triangularly from the top z-degree down.  An odd-index
/// coupling carries one stray factor of gamma: the stored series is
/// t_k / gamma^(k mod 2).  The z^0 coefficient of each condition is
/// not solvable for anything and is returned as a residual (zero on
/// even-parity data).  The two conditions must agree on t; a mismatch
/// throws.
struct CouplingSolution {
  TruncatedSeries t;
  std::map<int, TruncatedSeries> white;  // keys 2..d
  std::map<int, TruncatedSeries> black;  // keys 2..dtilde
  TruncatedSeries white_residual;
  TruncatedSeries black_residual;
};
CouplingSolution potentials_from_parameters(const SpectralParameters& p);

/// Inverse of potentials_from_parameters on the even quartic family
/// (d, dtilde <= 4, even couplings only).  a3 and b3 are monomials in
/// u, a1 and b1 solve a 2x2 linear system given u, and u itself is the
/// fixed point of the vertex-weight relation, iterated from u = t/c.
/// Output series live in the model ring with caps {cinv <= edge_cap,
/// t <= t_order}.
SpectralParameters solve_even_curve(const ModelSpec& spec, int t_order, int edge_cap);

/// The spectral polynomial as a banded determinant over the scaled
/// carriers: the coefficient of xs^i ys^j equals gamma^(i+j) times the
/// coefficient of x^i y^j in E(x,y).  Degree d in xs, dtilde in ys.
TruncatedSeries build_E_determinant(const SpectralParameters& p);

/// The same polynomial assembled on the oracle side as
/// (V'(x)+cy)(Vt'(y)+cx) + P(x,y)/c - ct, over the xinv/yinv carriers.
/// caps.ring must contain xinv and yinv.
TruncatedSeries build_E_formula(PeelOracle& oracle, const Caps& caps);

/// Coefficient of x^-(k+1) in Y(x) by Lagrange inversion at z = inf.
/// With zbar = x*Phi(zbar) and y = Ups(zbar), this is
/// (1/(k+1)) [zbar^k] (Ups'(zbar) Phi(zbar)^(k+1)).  On even data the
/// odd-k coefficients vanish; a nonzero odd-k extraction throws (its
/// value would carry a bare gamma).
TruncatedSeries lagrange_Y_coeff(const SpectralParameters& p, int k);
/// Mirror: coefficient of y^-(k+1) in X(y).
TruncatedSeries lagrange_X_coeff(const SpectralParameters& p, int k);

/// Chain moments on the parameter side, from the splitting identities
///   c <AB>     = t^2 + tt2 <B^2> + tt4 <B^4>
///   c^2 <AABB> = t^3 + tt4 <B^2>^2 + 3t tt2 <B^2>
///                + (tt2^2 + 3t tt4) <B^4> + 2 tt2 tt4 <B^6> + tt4^2 <B^8>
/// with <B^2k> = c * lagrange_X_coeff(p, 2k).
struct DijForms {
  TruncatedSeries d11;  // <AB>
  TruncatedSeries d22;  // <AABB>
};
DijForms dij_splitting_forms(const SpectralParameters& p);

/// Rewrites a polynomial over the unscaled parameter variables into
/// the scaled ones: g^2 -> u, al_k -> a_k * g, be_k -> b_k * g.  Every
/// monomial must come out with an even net power of g; an odd leftover
/// throws.  Other variables are carried over by name.
Poly even_parity_reduce(const Poly& src, const RingPtr& target);

/// Caps transported onto another ring: finite bounds are copied by
/// variable name, everything else stays uncapped.
Caps caps_onto(const Caps& src, const RingPtr& target);

}  // namespace hmap
