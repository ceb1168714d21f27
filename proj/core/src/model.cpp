#include "hmap/model.hpp"

#include <sstream>

namespace hmap {

ModelSpec::ModelSpec(int d, int dtilde) : d_(d), dtilde_(dtilde) {
  if (d < 2 || dtilde < 2) throw AlgebraError("ModelSpec: degree bounds must be >= 2");
  rebuild_ring();
}

ModelSpec ModelSpec::quartic_even() {
  ModelSpec m(4, 4);
  m.set_white(3, Rational(0));
  m.set_black(3, Rational(0));
  return m;
}

ModelSpec ModelSpec::symbolic(int d, int dtilde) { return ModelSpec(d, dtilde); }

ModelSpec& ModelSpec::set_white(int k, Rational v) {
  if (k < 2 || k > d_) throw AlgebraError("ModelSpec: white coupling index out of range");
  white_pinned_[k] = std::move(v);
  rebuild_ring();
  return *this;
}

ModelSpec& ModelSpec::set_black(int l, Rational v) {
  if (l < 2 || l > dtilde_) throw AlgebraError("ModelSpec: black coupling index out of range");
  black_pinned_[l] = std::move(v);
  rebuild_ring();
  return *this;
}

bool ModelSpec::white_symbolic(int k) const { return !white_pinned_.count(k); }
bool ModelSpec::black_symbolic(int l) const { return !black_pinned_.count(l); }

std::optional<Rational> ModelSpec::white_value(int k) const {
  auto it = white_pinned_.find(k);
  if (it == white_pinned_.end()) return std::nullopt;
  return it->second;
}

std::optional<Rational> ModelSpec::black_value(int l) const {
  auto it = black_pinned_.find(l);
  if (it == black_pinned_.end()) return std::nullopt;
  return it->second;
}

bool ModelSpec::white_active(int k) const {
  if (k < 2 || k > d_) return false;
  auto v = white_value(k);
  return !v || !is_zero(*v);
}

bool ModelSpec::black_active(int l) const {
  if (l < 2 || l > dtilde_) return false;
  auto v = black_value(l);
  return !v || !is_zero(*v);
}

bool ModelSpec::even_only() const {
  for (int k = 3; k <= d_; k += 2)
    if (white_active(k)) return false;
  for (int l = 3; l <= dtilde_; l += 2)
    if (black_active(l)) return false;
  return true;
}

std::string ModelSpec::white_name(int k) { return "t" + std::to_string(k); }
std::string ModelSpec::black_name(int l) { return "tt" + std::to_string(l); }

std::vector<std::string> ModelSpec::base_variables() const {
  std::vector<std::string> names{"cinv", "t"};
  for (int k = 2; k <= d_; ++k)
    if (white_symbolic(k)) names.push_back(white_name(k));
  for (int l = 2; l <= dtilde_; ++l)
    if (black_symbolic(l)) names.push_back(black_name(l));
  return names;
}

void ModelSpec::rebuild_ring() { ring_ = Ring::make(base_variables()); }

RingPtr ModelSpec::ring_with(const std::vector<std::string>& extras) const {
  return ring_->extended(extras);
}

Poly ModelSpec::white_coupling(const RingPtr& r, int k) const {
  if (k < 2 || k > d_) return Poly::zero(r);
  auto v = white_value(k);
  if (v) return Poly::constant(r, *v);
  return Poly::var(r, white_name(k));
}

Poly ModelSpec::black_coupling(const RingPtr& r, int l) const {
  if (l < 2 || l > dtilde_) return Poly::zero(r);
  auto v = black_value(l);
  if (v) return Poly::constant(r, *v);
  return Poly::var(r, black_name(l));
}

Poly ModelSpec::coupling_for(const RingPtr& r, Letter peeled, int k) const {
  // Peeling an A consumes a black inner face; couplings tt.
  return peeled == Letter::A ? black_coupling(r, k) : white_coupling(r, k);
}

ModelSpec ModelSpec::color_swapped() const {
  ModelSpec m(dtilde_, d_);
  for (auto& [l, v] : black_pinned_) m.set_white(l, v);
  for (auto& [k, v] : white_pinned_) m.set_black(k, v);
  return m;
}

std::string ModelSpec::fingerprint() const {
  std::ostringstream os;
  os << "d" << d_ << ".dt" << dtilde_;
  for (auto& [k, v] : white_pinned_) os << ".t" << k << "=" << rational_to_string(v);
  for (auto& [l, v] : black_pinned_) os << ".tt" << l << "=" << rational_to_string(v);
  return os.str();
}

}  // namespace hmap
