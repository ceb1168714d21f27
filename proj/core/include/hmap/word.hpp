#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hmap {

enum class Letter : unsigned char { A = 0, B = 1 };

/// Boundary condition of a bracket.  Three shapes matter and stay
/// distinct: the null word (no boundary at all, value 1), the unit
/// word "1" (a boundary vertex with no letters, value t), and proper
/// letter strings over {A, B}.
class BoundaryWord {
 public:
  /// The null word.
  BoundaryWord() = default;
  static BoundaryWord null_word() { return BoundaryWord(); }
  static BoundaryWord unit();
  static BoundaryWord from_letters(std::vector<Letter> ls);

  /// Grammar: "1" is the unit word; otherwise a nonempty string over
  /// {A, B}.  The null word has no surface syntax.
  static std::optional<BoundaryWord> parse(const std::string& s);

  bool is_null() const { return null_; }
  bool is_unit() const { return !null_ && letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  std::size_t count(Letter l) const;

  BoundaryWord rotated(std::size_t k) const;
  BoundaryWord reversed() const;
  BoundaryWord swapped_colors() const;
  /// Lexicographically minimal cyclic rotation (Booth).
  BoundaryWord canonical() const;

  /// letters()[0..n-1] as a word; null/unit are unchanged.
  BoundaryWord prefix(std::size_t n) const;
  /// letters()[from..n) as a word.
  BoundaryWord suffix(std::size_t from) const;
  BoundaryWord appended(Letter l, std::size_t copies = 1) const;

  bool operator==(const BoundaryWord& o) const {
    return null_ == o.null_ && letters_ == o.letters_;
  }
  bool operator!=(const BoundaryWord& o) const { return !(*this == o); }
  bool operator<(const BoundaryWord& o) const;

  std::string to_string() const;

 private:
  bool null_ = true;
  std::vector<Letter> letters_;
};

/// Repeated-letter run helper: A^i (BA)^k B^j.
BoundaryWord chain_word(int i, int k, int j);

}  // namespace hmap
