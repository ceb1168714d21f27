#include "hmap/fault.hpp"

#include <mutex>

namespace hmap {

namespace {

struct FaultState {
  std::mutex mu;
  bool armed = false;
  bool delivered = false;
  std::uint64_t seed = 0;
  std::uint64_t event = 0;
  std::uint64_t target = 0;
};

FaultState& state() {
  static FaultState s;
  return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

void fault_arm(std::uint64_t seed) {
  FaultState& s = state();
  std::lock_guard<std::mutex> lk(s.mu);
  s.armed = true;
  s.delivered = false;
  s.seed = seed;
  s.event = 0;
  // Early events are bracket-store inserts, which every suite hits.
  s.target = splitmix64(seed) % 24;
}

void fault_disarm() {
  FaultState& s = state();
  std::lock_guard<std::mutex> lk(s.mu);
  s.armed = false;
}

bool fault_armed() {
  FaultState& s = state();
  std::lock_guard<std::mutex> lk(s.mu);
  return s.armed;
}

bool fault_delivered() {
  FaultState& s = state();
  std::lock_guard<std::mutex> lk(s.mu);
  return s.delivered;
}

Poly fault_filter(Poly p, const char*) {
  FaultState& s = state();
  std::lock_guard<std::mutex> lk(s.mu);
  if (!s.armed || s.delivered || p.is_zero()) return p;
  const std::uint64_t ev = s.event++;
  if (ev != s.target) return p;
  const std::size_t idx = static_cast<std::size_t>(splitmix64(s.seed ^ (ev + 1)) % p.size());
  std::vector<Poly::Term> ts = p.terms();
  ts[idx].second = -ts[idx].second;
  s.delivered = true;
  return Poly::from_terms(p.ring(), std::move(ts));
}

TruncatedSeries fault_filter(TruncatedSeries v, const char* site) {
  Poly p = fault_filter(v.poly(), site);
  return TruncatedSeries(std::move(p), v.caps());
}

}  // namespace hmap
