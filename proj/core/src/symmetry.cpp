#include <algorithm>
#include <utility>

#include "mutalab/quiver.hpp"

namespace mutalab {

namespace {

constexpr unsigned kPlus = 1U;
constexpr unsigned kMinus = 2U;

// Per-vertex invariant: symmetrizer value plus the sorted multiset of
// incident (b_ij, b_ji) pairs. Any witness must map i to a vertex with the
// same signature (negated pairs when epsilon = -1).
struct Signature {
  Int d = 0;
  std::vector<std::pair<Int, Int>> incident;
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

Signature signature(const ValuedQuiver& q, Vertex i, int eps) {
  Signature s{q.symmetrizer(i), {}};
  for (int j = 0; j < q.rank(); ++j) {
    if (j != i && q.entry(i, j) != 0) s.incident.emplace_back(eps * q.entry(i, j), eps * q.entry(j, i));
  }
  std::sort(s.incident.begin(), s.incident.end());
  return s;
}

class WitnessSearch {
 public:
  WitnessSearch(const ValuedQuiver& q, const ValuedQuiver& q2, unsigned signs)
      : q_(q), q2_(q2), n_(q.rank()), image_(static_cast<std::size_t>(n_), -1), used_(static_cast<std::size_t>(n_), false) {
    std::vector<Signature> plus, minus, target;
    for (int i = 0; i < n_; ++i) {
      plus.push_back(signature(q, i, 1));
      minus.push_back(signature(q, i, -1));
      target.push_back(signature(q2, i, 1));
    }
    auto sorted = [](std::vector<Signature> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    const auto target_sorted = sorted(target);
    if ((signs & kPlus) && sorted(plus) != target_sorted) signs &= ~kPlus;
    if ((signs & kMinus) && sorted(minus) != target_sorted) signs &= ~kMinus;
    signs_ = signs;

    compat_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      for (int x = 0; x < n_; ++x) {
        unsigned m = 0;
        if (plus[i] == target[x]) m |= kPlus;
        if (minus[i] == target[x]) m |= kMinus;
        compat_[static_cast<std::size_t>(i * n_ + x)] = m;
      }
    }
  }

  std::optional<SymmetryWitness> run() {
    if (signs_ == 0) return std::nullopt;
    if (!extend(0, signs_)) return std::nullopt;
    return SymmetryWitness{Permutation(image_), (result_signs_ & kPlus) ? 1 : -1};
  }

 private:
  bool extend(int i, unsigned signs) {
    if (i == n_) {
      result_signs_ = signs;
      return true;
    }
    for (int x = 0; x < n_; ++x) {
      if (used_[x]) continue;
      unsigned m = signs & compat_[static_cast<std::size_t>(i * n_ + x)];
      for (int j = 0; j < i && m != 0; ++j) {
        const Int fwd = q_.entry(i, j);
        const Int back = q_.entry(j, i);
        const Int fwd2 = q2_.entry(x, image_[j]);
        const Int back2 = q2_.entry(image_[j], x);
        if ((m & kPlus) && (fwd2 != fwd || back2 != back)) m &= ~kPlus;
        if ((m & kMinus) && (fwd2 != -fwd || back2 != -back)) m &= ~kMinus;
      }
      if (m == 0) continue;
      image_[i] = x;
      used_[x] = true;
      if (extend(i + 1, m)) return true;
      used_[x] = false;
      image_[i] = -1;
    }
    return false;
  }

  const ValuedQuiver& q_;
  const ValuedQuiver& q2_;
  int n_;
  unsigned signs_ = 0;
  unsigned result_signs_ = 0;
  std::vector<unsigned> compat_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<SymmetryWitness> symmetry_witness(const ValuedQuiver& q, const ValuedQuiver& q2, SignPolicy policy) {
  if (q.rank() != q2.rank()) throw Error(ErrorCode::SizeMismatch, "quivers have different rank");
  const unsigned signs = policy == SignPolicy::Any ? (kPlus | kMinus) : kPlus;
  return WitnessSearch(q, q2, signs).run();
}

}  // namespace mutalab
