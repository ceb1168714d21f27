#include "hmap/word.hpp"

#include <algorithm>

namespace hmap {

BoundaryWord BoundaryWord::unit() {
  BoundaryWord w;
  w.null_ = false;
  return w;
}

BoundaryWord BoundaryWord::from_letters(std::vector<Letter> ls) {
  BoundaryWord w;
  w.null_ = false;
  w.letters_ = std::move(ls);
  return w;
}

std::optional<BoundaryWord> BoundaryWord::parse(const std::string& s) {
  if (s == "1") return unit();
  if (s.empty()) return std::nullopt;
  std::vector<Letter> ls;
  ls.reserve(s.size());
  for (char ch : s) {
    if (ch == 'A')
      ls.push_back(Letter::A);
    else if (ch == 'B')
      ls.push_back(Letter::B);
    else
      return std::nullopt;
  }
  return from_letters(std::move(ls));
}

std::size_t BoundaryWord::count(Letter l) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
}

BoundaryWord BoundaryWord::rotated(std::size_t k) const {
  if (letters_.size() < 2) return *this;
  std::vector<Letter> ls(letters_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) ls[i] = letters_[(i + k) % letters_.size()];
  BoundaryWord w = *this;
  w.letters_ = std::move(ls);
  return w;
}

BoundaryWord BoundaryWord::reversed() const {
  BoundaryWord w = *this;
  std::reverse(w.letters_.begin(), w.letters_.end());
  return w;
}

BoundaryWord BoundaryWord::swapped_colors() const {
  BoundaryWord w = *this;
  for (auto& l : w.letters_) l = (l == Letter::A) ? Letter::B : Letter::A;
  return w;
}

BoundaryWord BoundaryWord::canonical() const {
  const std::size_t n = letters_.size();
  if (n < 2) return *this;
  // Booth's least-rotation over the doubled word.
  std::vector<int> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter sj = letters_[j % n];
    int i = f[j - k - 1];
    while (i != -1 && sj != letters_[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < letters_[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != letters_[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < letters_[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return rotated(k);
}

BoundaryWord BoundaryWord::prefix(std::size_t n) const {
  if (null_ || letters_.empty()) return *this;
  BoundaryWord w = *this;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n));
  return w;
}

BoundaryWord BoundaryWord::suffix(std::size_t from) const {
  if (null_ || letters_.empty()) return *this;
  BoundaryWord w = *this;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end());
  return w;
}

BoundaryWord BoundaryWord::appended(Letter l, std::size_t copies) const {
  BoundaryWord w = *this;
  w.null_ = false;
  w.letters_.insert(w.letters_.end(), copies, l);
  return w;
}

bool BoundaryWord::operator<(const BoundaryWord& o) const {
  if (null_ != o.null_) return null_;
  return letters_ < o.letters_;
}

std::string BoundaryWord::to_string() const {
  if (null_) return "<null>";
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l == Letter::A ? 'A' : 'B');
  return s;
}

BoundaryWord chain_word(int i, int k, int j) {
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(i + 2 * k + j));
  for (int n = 0; n < i; ++n) ls.push_back(Letter::A);
  for (int n = 0; n < k; ++n) {
    ls.push_back(Letter::B);
    ls.push_back(Letter::A);
  }
  for (int n = 0; n < j; ++n) ls.push_back(Letter::B);
  return BoundaryWord::from_letters(std::move(ls));
}

}  // namespace hmap
