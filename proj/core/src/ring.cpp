#include "hmap/ring.hpp"

#include <algorithm>
#include <limits>

namespace hmap {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw AlgebraError("duplicate ring variable: " + names_[i]);
}

RingPtr Ring::make(std::vector<std::string> names) {
  return RingPtr(new Ring(std::move(names)));
}

std::size_t Ring::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw AlgebraError("unknown ring variable: " + name);
}

bool Ring::has(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

RingPtr Ring::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = names_;
  for (const auto& n : extra)
    if (!has(n)) names.push_back(n);
  return make(std::move(names));
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::is_unit() const {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

namespace {
inline std::int16_t checked(int v) {
  if (v > std::numeric_limits<std::int16_t>::max() || v < std::numeric_limits<std::int16_t>::min())
    throw AlgebraError("monomial exponent overflow");
  return static_cast<std::int16_t>(v);
}
}  // namespace

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  r.e.resize(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = checked(int(e[i]) + int(o.e[i]));
  return r;
}

Monomial Monomial::over(const Monomial& o) const {
  Monomial r;
  r.e.resize(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = checked(int(e[i]) - int(o.e[i]));
  return r;
}

Monomial Monomial::power(int k) const {
  Monomial r;
  r.e.resize(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = checked(int(e[i]) * k);
  return r;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // lexicographic, earlier variable dominates
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : m.e) {
    h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(x));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hmap
