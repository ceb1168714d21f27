#pragma once

#include "hmap/bracket.hpp"
#include "hmap/ratexpr.hpp"

namespace hmap {

/// Catalytic variables are carried as their inverses so that caps
/// (upper exponent bounds) truncate the expansions: xinv = 1/x,
/// yinv = 1/y, winv = 1/omega.  Positive powers of x, y, omega are
/// negative exponents of these.  The caps passed in fix the window:
/// cinv bounds the edge count, xinv/yinv/winv bound the expansion
/// depth in the respective variable.
inline constexpr const char* kXInv = "xinv";
inline constexpr const char* kYInv = "yinv";
inline constexpr const char* kWInv = "winv";

/// -sum_k t_k x^{k-1}: derivative of the white potential, as a
/// polynomial in xinv^-(k-1).  `black` swaps to the tt couplings.
Poly potential_derivative(const ModelSpec& spec, const RingPtr& ring, bool black,
                          const std::string& var_inv);

/// One-variable resolvent expansions and their relatives; every
/// result lives at the given caps.
TruncatedSeries aux_W(PeelOracle& oracle, const Caps& caps);       // sum <A^p> x^-p-1
TruncatedSeries aux_Wtilde(PeelOracle& oracle, const Caps& caps);  // sum <B^q> y^-q-1
TruncatedSeries aux_Y(PeelOracle& oracle, const Caps& caps);       // (W - V')/c
TruncatedSeries aux_X(PeelOracle& oracle, const Caps& caps);       // (Wtilde - Vt')/c

/// f_series(i,j): sum_k <A^i (BA)^k B^j> omega^-k-1.
TruncatedSeries f_series(PeelOracle& oracle, int i, int j, const Caps& caps);
/// f_series(0,0) - c.
TruncatedSeries fhat_series(PeelOracle& oracle, const Caps& caps);

/// Two-variable resolvent m_j = sum <A^a (BA)^k B^j> x^-a-1 omega^-k-1;
/// M = m_0.
TruncatedSeries aux_m(PeelOracle& oracle, int j, const Caps& caps);
TruncatedSeries aux_M(PeelOracle& oracle, const Caps& caps);

/// Divided-difference assemblies.
TruncatedSeries aux_R(PeelOracle& oracle, const Caps& caps);       // -sum_i x^i sum_k t_k f_{k-2-i,0}
TruncatedSeries aux_Rtilde(PeelOracle& oracle, const Caps& caps);  // -sum_j y^j sum_l tt_l f_{0,l-2-j}
TruncatedSeries aux_Splus(PeelOracle& oracle, const Caps& caps);   // -sum_j y^j sum_l tt_l m_{l-2-j}
TruncatedSeries aux_Phat(PeelOracle& oracle, const Caps& caps);    // sum x^i y^j sum t_k tt_l f_{k-2-i,l-2-j}
TruncatedSeries aux_P(PeelOracle& oracle, const Caps& caps);       // sum x^i y^j sum t_k tt_l D_{k-2-i,l-2-j}

/// A(w) = sum_r F_r w^{r+1} with F_r = <(BA)^r>, in the variable "w".
TruncatedSeries aux_Aofw(PeelOracle& oracle, const Caps& caps);

/// Named dispatch (W|Wtilde|Y|X|M|R|Rtilde|Splus|Phat|P|Aofw).
TruncatedSeries aux_series(PeelOracle& oracle, const std::string& name, const Caps& caps);

/// Coefficients keyed by k where the term is omega^-k (so k >= 1 is
/// the series tail, k <= 0 polynomial part).
std::map<int, TruncatedSeries> omega_coefficients(const TruncatedSeries& s);

/// Edge weights of the spin-model correspondence: the inverse of
/// [[c^2, -c*t2], [-c*tt2, c^2]] arranged as (c_pp, c_mm, c_pm),
/// plus the digon-resummed triple (c*tt2/D, c*t2/D, c^2/D) with
/// D = c^2 - t2*tt2.
struct IsingWeights {
  RationalExpr cpp, cmm, cpm;
  RationalExpr cpp_resummed, cmm_resummed, cpm_resummed;
};
IsingWeights ising_parameter_match(const RationalExpr& c, const RationalExpr& t2,
                                   const RationalExpr& tt2);
IsingWeights ising_parameter_match(const Rational& c, const Rational& t2, const Rational& tt2);

}  // namespace hmap
