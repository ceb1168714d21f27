#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hmap/genfun.hpp"

namespace hmap {

/// Positive-power carriers for the boundary polynomial Q(x,y); the
/// series machinery keeps using xinv/yinv, and tests bridge the two
/// by coefficient extraction.
inline constexpr const char* kXVar = "x";
inline constexpr const char* kYVar = "y";
/// Inverse of the kernel argument xi.
inline constexpr const char* kXiInv = "xiinv";

/// Placeholder symbol for the two-variable resolvent coefficient
/// f_{i,j}; Q is polynomial in these, and substituting the oracle's
/// series for them recovers the analytic object.
std::string unknown_name(int i, int j);
std::vector<std::pair<int, int>> unknown_indices(int d, int dtilde);

/// Q(x,y) in the expanded division-free form
///   c^2 Q = -c fh (V'+cy-g01)(Vt'+cx-g10) + cxR(Vt'+cx-g10)
///           + cyRt(V'+cy-g01) + w R Rt + (fh w + cxy)(c^2 g00 - Ph)
/// with fh = g00 - c and R, Rt, Ph expanded over the unknowns.  Exact
/// polynomial over the coupling ring extended by x, y, winv and the
/// unknowns; no series division by fh is ever performed.
struct SymbolicQ {
  Poly q;
  int d = 0;
  int dtilde = 0;
};
SymbolicQ build_Q(const ModelSpec& spec);

/// Substitutes the oracle's f-series for every unknown appearing in p.
/// caps.ring() must contain p's variables; the result lives over the
/// same ring with the unknown slots unused.
TruncatedSeries eval_at_oracle(const Poly& p, PeelOracle& oracle, const Caps& caps);
TruncatedSeries q_at_oracle(const SymbolicQ& sq, PeelOracle& oracle, const Caps& caps);

/// Residuals of the splitting equations on M, each truncated to
/// `window`:
///   eq1:  c(y-Y)(x Splus - Rt) - M(cx(Vt'+cx-f10)+Rt w) + c^2 x f00
///         - x Ph - Rt(-V'-cy+f01)
///   eq2:  M(fh w + cxY) + xR - fh(W - f01)
///   remainder:  [x V'(x) M]_{x>=0} - xR - fh f01
///   tutte:  (c - f00 - cwxY)(M/w - W) - cwxWY - xR - fh f01,
/// the last two with winv read as the direct variable w = 1/omega.
struct MEquationReport {
  TruncatedSeries eq1, eq2, remainder, tutte;
  bool all_zero() const;
};
MEquationReport check_M_equations(PeelOracle& oracle, const Caps& caps, const Caps& window);

/// The (d-1)(dtilde-1) coefficient equations [x^i y^j](Q - E) as
/// polynomials in the unknown block g_{i,j}, 0 <= i <= d-2,
/// 0 <= j <= dtilde-2, plus their Jacobian.  The curve side E carries
/// no unknowns, so the Jacobian is Q's; it is computed exactly, before
/// any series substitution.
struct CijSystem {
  SymbolicQ q;
  std::vector<std::pair<int, int>> indices;  // equation order, row-major
  std::vector<Poly> qij;                     // [x^i y^j] Q
  std::vector<std::string> unknowns;         // column order
  std::vector<std::vector<Poly>> jacobian;
  Poly jacobian_det;
};
CijSystem cij_system(const ModelSpec& spec);

/// The unique power series in 1/xi with w(xi) = (1 - A(w(xi)))/xi,
/// computed by fixed-point iteration (one order of accuracy per pass).
/// caps.ring() must contain kXiInv and the A-series variable "w"; the
/// result is a series in kXiInv with the "w" slot unused.
TruncatedSeries kernel_fixed_point(PeelOracle& oracle, int xi_order, const Caps& caps);

}  // namespace hmap
