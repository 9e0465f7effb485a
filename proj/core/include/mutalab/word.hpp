#ifndef MUTALAB_WORD_HPP
#define MUTALAB_WORD_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "mutalab/quiver.hpp"

namespace mutalab {

/// A composite mutation. Letters are applied first-listed-first, so
/// {i, j, k} means mutate at i, then j, then k.
class MutationWord {
 public:
  MutationWord() = default;
  MutationWord(std::initializer_list<Vertex> letters) : letters_(letters) {}
  explicit MutationWord(std::vector<Vertex> letters) : letters_(std::move(letters)) {}

  std::span<const Vertex> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Vertex operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Vertex v) { letters_.push_back(v); }
  void pop_back() { letters_.pop_back(); }

  /// No two adjacent letters are equal.
  bool is_reduced() const noexcept;
  std::set<Vertex> support() const;
  std::size_t multiplicity(Vertex j) const noexcept;
  MutationWord reversed() const;

  /// 1-based comma-separated form, e.g. "1,2,3".
  std::string to_string() const;

  friend bool operator==(const MutationWord&, const MutationWord&) = default;

 private:
  std::vector<Vertex> letters_;
};

/// Shortlex: shorter first, then lexicographic.
bool shortlex_less(const MutationWord& a, const MutationWord& b) noexcept;

/// Cancels adjacent equal letters until none remain (normal form in the free
/// product of order-two generators). Throws letter-out-of-range.
MutationWord reduce(const MutationWord& w, int rank);

/// Folds mutate() over the letters.
ValuedQuiver apply(const ValuedQuiver& q, const MutationWord& w);

/// No split w = u.v with u, v nonempty has disjoint supports.
bool is_homogeneous(const MutationWord& w);
/// Support is every vertex 0..rank-1.
bool is_full(const MutationWord& w, int rank);

/// Parses "1,2,3" (1-based) into a word. Throws bad-params on junk.
MutationWord parse_word(const std::string& text);

}  // namespace mutalab

#endif  // MUTALAB_WORD_HPP
