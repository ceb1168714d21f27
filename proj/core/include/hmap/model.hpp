#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmap/poly.hpp"
#include "hmap/word.hpp"

namespace hmap {

/// Degree bounds and coupling assignments of a model.  Every coupling
/// t_k (white, 2 <= k <= d) and tt_l (black, 2 <= l <= dtilde) is
/// either symbolic (a ring variable) or a fixed rational.  The vertex
/// weight t and the edge grading cinv (= 1/c) are always symbolic:
/// per-edge-count exactness of the oracle needs the cinv grading.
class ModelSpec {
 public:
  ModelSpec(int d, int dtilde);

  /// d = dtilde = 4, odd couplings pinned to 0, t2/t4/tt2/tt4 symbolic.
  static ModelSpec quartic_even();
  /// All couplings symbolic (including odd ones).
  static ModelSpec symbolic(int d, int dtilde);

  int d() const { return d_; }
  int dtilde() const { return dtilde_; }

  ModelSpec& set_white(int k, Rational v);
  ModelSpec& set_black(int l, Rational v);

  bool white_symbolic(int k) const;
  bool black_symbolic(int l) const;
  std::optional<Rational> white_value(int k) const;
  std::optional<Rational> black_value(int l) const;

  /// A coupling is active when symbolic or pinned to a nonzero value.
  bool white_active(int k) const;
  bool black_active(int l) const;
  /// No active coupling of odd index (enables the parity prune).
  bool even_only() const;

  static std::string white_name(int k);  // "t2", "t3", ...
  static std::string black_name(int l);  // "tt2", "tt3", ...

  /// cinv, t, then symbolic couplings in index order (white first).
  std::vector<std::string> base_variables() const;
  const RingPtr& ring() const { return ring_; }
  RingPtr ring_with(const std::vector<std::string>& extras) const;

  /// t_k or tt_l as an element of the given ring (variable or constant).
  Poly white_coupling(const RingPtr& r, int k) const;
  Poly black_coupling(const RingPtr& r, int l) const;
  Poly coupling_for(const RingPtr& r, Letter peeled, int k) const;

  /// Exchange of the two colors (d <-> dtilde, t_k <-> tt_k).
  ModelSpec color_swapped() const;

  /// Stable identity string (degrees + pinned values) for store keys.
  std::string fingerprint() const;

 private:
  int d_;
  int dtilde_;
  std::map<int, Rational> white_pinned_;
  std::map<int, Rational> black_pinned_;
  RingPtr ring_;
  void rebuild_ring();
};

}  // namespace hmap
