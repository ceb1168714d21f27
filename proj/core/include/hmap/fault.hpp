#pragma once

#include <cstdint>

#include "hmap/series.hpp"

namespace hmap {

/// Deterministic fault injection used by the verification CLI to prove
/// the checks can fail: when armed, exactly one coefficient flowing
/// through an injection site gets negated; which one is a pure
/// function of the seed.
void fault_arm(std::uint64_t seed);
void fault_disarm();
bool fault_armed();
bool fault_delivered();

/// Injection site.  Returns the value unchanged unless this call is
/// the seeded target, in which case one term's coefficient is negated.
Poly fault_filter(Poly p, const char* site);
TruncatedSeries fault_filter(TruncatedSeries s, const char* site);

}  // namespace hmap
