#include "hmap/bracket.hpp"

#include "hmap/fault.hpp"

namespace hmap {

std::optional<TruncatedSeries> BracketStore::find(const std::string& key, int edge_cap) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = map_.find(key);
  if (it == map_.end() || it->second.cap < edge_cap) return std::nullopt;
  if (it->second.cap == edge_cap) return it->second.value;
  Caps caps = it->second.value.caps();
  caps.set("cinv", edge_cap);
  return it->second.value.truncated_to(caps);
}

void BracketStore::put(const std::string& key, int edge_cap, TruncatedSeries value) {
  value = fault_filter(std::move(value), "bracket_store");
  std::lock_guard<std::mutex> lk(mu_);
  auto it = map_.find(key);
  if (it != map_.end() && it->second.cap >= edge_cap) return;
  map_.insert_or_assign(it == map_.end() ? map_.begin() : it, key, Entry{edge_cap, std::move(value)});
}

std::size_t BracketStore::size() const {
  std::lock_guard<std::mutex> lk(mu_);
  return map_.size();
}

PeelOracle::PeelOracle(ModelSpec spec) : spec_(std::move(spec)), ring_(spec_.ring()) {}

Caps PeelOracle::caps_for(int edge_cap) const { return Caps::none(ring_).set("cinv", edge_cap); }

std::optional<TruncatedSeries> PeelOracle::base_or_prune(const BoundaryWord& w, int edge_cap) const {
  const Caps caps = caps_for(edge_cap);
  if (w.is_null()) return TruncatedSeries::constant(caps, Rational(1));
  if (w.is_unit()) return TruncatedSeries::var(caps, "t");
  // Every map with a nonempty boundary has at least ceil(|w|/2) edges.
  const int min_edges = static_cast<int>((w.size() + 1) / 2);
  if (min_edges > edge_cap) return TruncatedSeries::zero(caps);
  if (spec_.even_only() && w.size() % 2 == 1) return TruncatedSeries::zero(caps);
  return std::nullopt;
}

TruncatedSeries PeelOracle::bracket(const BoundaryWord& w, int edge_cap) {
  if (auto b = base_or_prune(w, edge_cap)) return *b;
  const BoundaryWord canon = w.canonical();
  const std::string key = canon.to_string();
  if (auto hit = store_.find(key, edge_cap)) return *hit;
  TruncatedSeries v = eval(canon, edge_cap, /*literal_route=*/false);
  store_.put(key, edge_cap, std::move(v));
  // Read back through the store so the caller sees exactly what later
  // memo hits will see (put may filter or keep a wider entry).
  return *store_.find(key, edge_cap);
}

TruncatedSeries PeelOracle::bracket_literal(const BoundaryWord& w, int edge_cap) {
  if (auto b = base_or_prune(w, edge_cap)) return *b;
  const std::string key = w.to_string();
  if (auto hit = literal_store_.find(key, edge_cap)) return *hit;
  TruncatedSeries v = eval(w, edge_cap, /*literal_route=*/true);
  literal_store_.put(key, edge_cap, std::move(v));
  return *literal_store_.find(key, edge_cap);
}

TruncatedSeries PeelOracle::d_coeff(int i, int j, int edge_cap) {
  return bracket(chain_word(i, 0, j), edge_cap);
}

TruncatedSeries PeelOracle::rule_sum(const BoundaryWord& w, int edge_cap, bool literal_route) {
  auto sub = [&](const BoundaryWord& piece, int cap) {
    return literal_route ? bracket_literal(piece, cap) : bracket(piece, cap);
  };

  BoundaryWord word = w;
  if (!literal_route) {
    // Peel an A when the word has one: rotate the last A to the end.
    const auto& ls = word.letters();
    std::size_t last_a = ls.size();
    for (std::size_t i = ls.size(); i-- > 0;)
      if (ls[i] == Letter::A) {
        last_a = i;
        break;
      }
    if (last_a != ls.size()) word = word.rotated(last_a + 1);
  }

  const Letter trailing = word.letters().back();
  const Letter inner = (trailing == Letter::A) ? Letter::B : Letter::A;
  const int max_face = (trailing == Letter::A) ? spec_.dtilde() : spec_.d();
  const BoundaryWord head = word.prefix(word.size() - 1);
  const int inner_cap = edge_cap - 1;
  const Caps inner_caps = caps_for(inner_cap);

  TruncatedSeries acc = TruncatedSeries::zero(inner_caps);
  for (int k = 2; k <= max_face; ++k) {
    const Poly tk = spec_.coupling_for(ring_, trailing, k);
    if (tk.is_zero()) continue;
    acc += sub(head.appended(inner, static_cast<std::size_t>(k - 1)), inner_cap).mul_poly(tk);
  }
  const auto& hl = head.letters();
  for (std::size_t i = 0; i < hl.size(); ++i) {
    if (hl[i] != inner) continue;
    acc += sub(head.prefix(i), inner_cap) * sub(head.suffix(i + 1), inner_cap);
  }
  return acc;
}

TruncatedSeries PeelOracle::eval(const BoundaryWord& w, int edge_cap, bool literal_route) {
  TruncatedSeries acc = rule_sum(w, edge_cap, literal_route);
  // The rule computes c * bracket; dividing by c adds one edge, so
  // widen the caps before the shift.
  return acc.truncated_to(caps_for(edge_cap)).mul_var("cinv", 1);
}

}  // namespace hmap
