#include "hmap/rational.hpp"

namespace hmap {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw AlgebraError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw AlgebraError("bad rational literal: " + s);
  if (sgn(q.get_den()) == 0)
    throw AlgebraError("bad rational literal (zero denominator): " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::size_t rational_hash(const Rational& r) {
  // FNV-1a over the decimal form; stable across platforms.
  std::string s = rational_to_string(r);
  std::size_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hmap
