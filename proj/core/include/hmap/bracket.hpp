#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "hmap/model.hpp"
#include "hmap/series.hpp"
#include "hmap/word.hpp"

namespace hmap {

/// Cache from (word key, edge cap) to exact truncated values.  A hit
/// at a higher cap answers any lower-cap query by truncation;
/// recomputing at a higher cap overwrites in place.  Insertions are
/// idempotent, so racing writers would be harmless; a mutex keeps it
/// simple anyway.
class BracketStore {
 public:
  std::optional<TruncatedSeries> find(const std::string& key, int edge_cap) const;
  void put(const std::string& key, int edge_cap, TruncatedSeries value);
  std::size_t size() const;

 private:
  struct Entry {
    int cap;
    TruncatedSeries value;
  };
  mutable std::mutex mu_;
  std::unordered_map<std::string, Entry> map_;
};

/// The enumeration oracle.  bracket() memoizes on the canonical cyclic
/// rotation and peels at a rotation-adjusted position;
/// bracket_literal() peels the literal trailing letter with no
/// canonicalization, giving an independent evaluation route for the
/// cyclic/reversal invariance tests.
class PeelOracle {
 public:
  explicit PeelOracle(ModelSpec spec);

  const ModelSpec& spec() const { return spec_; }
  const RingPtr& ring() const { return ring_; }
  Caps caps_for(int edge_cap) const;

  TruncatedSeries bracket(const BoundaryWord& w, int edge_cap);
  TruncatedSeries bracket_literal(const BoundaryWord& w, int edge_cap);

  /// D_ij = bracket of A^i B^j.
  TruncatedSeries d_coeff(int i, int j, int edge_cap);

  /// c * bracket as the splitting rule assembles it (before the final
  /// division by c); exposed for rule-consistency tests.
  TruncatedSeries rule_sum(const BoundaryWord& w, int edge_cap, bool literal_route);

 private:
  TruncatedSeries eval(const BoundaryWord& w, int edge_cap, bool literal_route);
  std::optional<TruncatedSeries> base_or_prune(const BoundaryWord& w, int edge_cap) const;

  ModelSpec spec_;
  RingPtr ring_;
  BracketStore store_;
  BracketStore literal_store_;
};

}  // namespace hmap
