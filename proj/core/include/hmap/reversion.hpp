#pragma once

#include "hmap/series.hpp"

namespace hmap {

/// Substitutes a full series for one variable of s, handling negative
/// exponents of that variable through series inversion (optionally
/// guided by unit_hint, forwarded to TruncatedSeries::invert).
TruncatedSeries substitute_series(const TruncatedSeries& s, const std::string& var,
                                  const TruncatedSeries& value,
                                  const Poly::Term* unit_hint = nullptr);

/// Functional inverse at the infinity branch.  Input is the expansion
/// of w(v) at v = ∞ written in the inverse variable vin (= 1/v):
///   s = κ·vin⁻¹ + Σ_{k≥0} aₖ·vinᵏ,  κ a single invertible term.
/// Output is the expansion of 1/v(w) at w = ∞ in wout (= 1/w):
///   r = κ·wout + Σ_{k≥2} bₖ·woutᵏ,
/// with s∘r = wout⁻¹ on the wout window.  Both variables must live in
/// the same ring; caps on wout bound the order.
TruncatedSeries laurent_reversion(const TruncatedSeries& s, const std::string& vin,
                                  const std::string& wout);

/// Functional inverse at the origin: s = κ·v + Σ_{k≥2} aₖ·vᵏ gives
/// r = κ⁻¹·w + Σ_{k≥2} bₖ·wᵏ with s∘r = w on the w window.
TruncatedSeries reversion_at_zero(const TruncatedSeries& s, const std::string& v,
                                  const std::string& w);

}  // namespace hmap
