#include "mutalab/word.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace mutalab {

bool MutationWord::is_reduced() const noexcept {
  return std::adjacent_find(letters_.begin(), letters_.end()) == letters_.end();
}

std::set<Vertex> MutationWord::support() const { return {letters_.begin(), letters_.end()}; }

std::size_t MutationWord::multiplicity(Vertex j) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), j));
}

MutationWord MutationWord::reversed() const { return MutationWord(std::vector<Vertex>(letters_.rbegin(), letters_.rend())); }

std::string MutationWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i] + 1);
  }
  return out;
}

bool shortlex_less(const MutationWord& a, const MutationWord& b) noexcept {
  if (a.length() != b.length()) return a.length() < b.length();
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(), b.letters().begin(), b.letters().end());
}

namespace {

void check_letters(const MutationWord& w, int rank) {
  for (Vertex v : w.letters()) {
    if (v < 0 || v >= rank) {
      throw Error(ErrorCode::LetterOutOfRange, "letter " + std::to_string(v + 1) + " not in 1.." + std::to_string(rank));
    }
  }
}

}  // namespace

MutationWord reduce(const MutationWord& w, int rank) {
  check_letters(w, rank);
  std::vector<Vertex> stack;
  for (Vertex v : w.letters()) {
    if (!stack.empty() && stack.back() == v) {
      stack.pop_back();
    } else {
      stack.push_back(v);
    }
  }
  return MutationWord(std::move(stack));
}

ValuedQuiver apply(const ValuedQuiver& q, const MutationWord& w) {
  check_letters(w, q.rank());
  ValuedQuiver out = q;
  for (Vertex v : w.letters()) out = mutate(out, v);
  return out;
}

bool is_homogeneous(const MutationWord& w) {
  const auto letters = w.letters();
  if (letters.size() < 2) return true;
  // Suffix counts let each split be tested in O(alphabet).
  std::map<Vertex, std::size_t> prefix, suffix;
  for (Vertex v : letters) ++suffix[v];
  for (std::size_t cut = 1; cut < letters.size(); ++cut) {
    const Vertex moved = letters[cut - 1];
    ++prefix[moved];
    if (--suffix[moved] == 0) suffix.erase(moved);
    bool shared = false;
    for (const auto& [v, count] : prefix) {
      if (suffix.count(v)) {
        shared = true;
        break;
      }
    }
    if (!shared) return false;
  }
  return true;
}

bool is_full(const MutationWord& w, int rank) {
  const auto s = w.support();
  if (static_cast<int>(s.size()) != rank) return false;
  return std::all_of(s.begin(), s.end(), [rank](Vertex v) { return v >= 0 && v < rank; });
}

MutationWord parse_word(const std::string& text) {
  std::vector<Vertex> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value < 1) {
      throw Error(ErrorCode::BadParams, "cannot parse word '" + text + "'");
    }
    letters.push_back(value - 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == text.size()) throw Error(ErrorCode::BadParams, "trailing comma in word '" + text + "'");
  }
  return MutationWord(std::move(letters));
}

}  // namespace mutalab
