#include "mutalab/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace mutalab {

namespace {

[[noreturn]] void reject(const std::string& why) { throw Error(ErrorCode::NotSkewSymmetrizable, why); }

void check_vertex(const ValuedQuiver& q, Vertex v) {
  if (v < 0 || v >= q.rank()) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v + 1) + " not in 1.." + std::to_string(q.rank()));
  }
}

// p/q in lowest terms, q > 0.
struct Ratio {
  Int num = 1;
  Int den = 1;
};

Ratio reduced(Int num, Int den) {
  if (den < 0) {
    num = checked::neg(num);
    den = checked::neg(den);
  }
  const Int g = std::gcd(num, den);
  return {num / g, den / g};
}

std::vector<Int> least_symmetrizer(int n, const std::vector<Int>& b) {
  auto at = [&](int i, int j) { return b[static_cast<std::size_t>(i * n + j)]; };
  std::vector<Ratio> ratio(static_cast<std::size_t>(n));
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  std::vector<Int> d(static_cast<std::size_t>(n), 0);
  int components = 0;

  for (int root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    const int c = components++;
    std::vector<int> members{root};
    component[root] = c;
    ratio[root] = {1, 1};
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int i = frontier.front();
      frontier.pop();
      for (int j = 0; j < n; ++j) {
        if (at(i, j) == 0) continue;
        // d_j = d_i * b_ij / (-b_ji)
        const Ratio implied = reduced(checked::mul(ratio[i].num, at(i, j)),
                                      checked::mul(ratio[i].den, checked::neg(at(j, i))));
        if (component[j] < 0) {
          component[j] = c;
          ratio[j] = implied;
          members.push_back(j);
          frontier.push(j);
        } else if (implied.num != ratio[j].num || implied.den != ratio[j].den) {
          reject("no positive symmetrizer exists (inconsistent ratios around a cycle)");
        }
      }
    }
    Int common_den = 1;
    for (int m : members) {
      common_den = std::lcm(common_den, ratio[m].den);
      if (common_den <= 0) throw Error(ErrorCode::IntegerOverflow, "symmetrizer denominator overflow");
    }
    Int g = 0;
    for (int m : members) {
      d[m] = checked::mul(ratio[m].num, common_den / ratio[m].den);
      g = std::gcd(g, d[m]);
    }
    for (int m : members) d[m] /= g;
  }
  return d;
}

}  // namespace

// ---- Permutation -----------------------------------------------------------

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Vertex v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidPermutation, "not a bijection of 1.." + std::to_string(image_.size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<Vertex>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<Vertex>(i);
  return Permutation(std::move(inv));
}

// ---- ValuedQuiver ----------------------------------------------------------

Matrix ValuedQuiver::matrix() const {
  Matrix m(static_cast<std::size_t>(n_), std::vector<Int>(static_cast<std::size_t>(n_)));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m[i][j] = entry(i, j);
  }
  return m;
}

bool ValuedQuiver::has_frozen() const noexcept {
  return std::any_of(frozen_.begin(), frozen_.end(), [](std::uint8_t f) { return f != 0; });
}

std::vector<Vertex> ValuedQuiver::mutable_vertices() const {
  std::vector<Vertex> out;
  for (int v = 0; v < n_; ++v) {
    if (!is_frozen(v)) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> ValuedQuiver::frozen_vertices() const {
  std::vector<Vertex> out;
  for (int v = 0; v < n_; ++v) {
    if (is_frozen(v)) out.push_back(v);
  }
  return out;
}

ValuedQuiver make_quiver(const Matrix& b, std::optional<std::vector<Int>> d) {
  const int n = static_cast<int>(b.size());
  if (n < 1) reject("exchange matrix must have at least one row");
  std::vector<Int> flat;
  flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : b) {
    if (static_cast<int>(row.size()) != n) reject("exchange matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  auto at = [&](int i, int j) { return flat[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < n; ++i) {
    if (at(i, i) != 0) reject("nonzero diagonal entry at " + std::to_string(i + 1));
    for (int j = i + 1; j < n; ++j) {
      const bool both_zero = at(i, j) == 0 && at(j, i) == 0;
      const bool opposite = sign(at(i, j)) * sign(at(j, i)) == -1;
      if (!both_zero && !opposite) {
        reject("entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ") and transpose are not of strictly opposite sign");
      }
    }
  }

  std::vector<Int> sym;
  if (d) {
    if (static_cast<int>(d->size()) != n) reject("symmetrizer length differs from rank");
    for (Int v : *d) {
      if (v <= 0) reject("symmetrizer entries must be positive");
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (checked::mul((*d)[i], at(i, j)) != checked::neg(checked::mul((*d)[j], at(j, i)))) {
          reject("d_i*b_ij != -d_j*b_ji at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
      }
    }
    sym = std::move(*d);
  } else {
    sym = least_symmetrizer(n, flat);
  }
  return ValuedQuiver(n, std::move(flat), std::move(sym), std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

std::vector<ValuedEdge> edges(const ValuedQuiver& q) {
  std::vector<ValuedEdge> out;
  const int n = q.rank();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (q.entry(i, j) > 0) out.push_back({i, j, q.entry(i, j), checked::neg(q.entry(j, i))});
    }
  }
  return out;
}

ValuedQuiver mutate(const ValuedQuiver& q, Vertex k) {
  check_vertex(q, k);
  if (q.is_frozen(k)) throw Error(ErrorCode::MutateAtFrozenVertex, "vertex " + std::to_string(k + 1) + " is frozen");
  const int n = q.n_;
  std::vector<Int> b(q.b_.size());
  for (int i = 0; i < n; ++i) {
    const Int bik = q.entry(i, k);
    for (int j = 0; j < n; ++j) {
      const Int bij = q.entry(i, j);
      Int& out = b[q.index(i, j)];
      if (i == k || j == k) {
        out = checked::neg(bij);
      } else {
        const Int through = checked::mul(bik, q.entry(k, j));
        out = through > 0 ? checked::add(bij, sign(bik) * through) : bij;
      }
    }
  }
  return ValuedQuiver(n, std::move(b), q.d_, q.frozen_);
}

ValuedQuiver permute(const ValuedQuiver& q, const Permutation& sigma) {
  if (sigma.size() != q.rank()) {
    throw Error(ErrorCode::InvalidPermutation, "permutation size differs from rank");
  }
  const int n = q.n_;
  std::vector<Int> b(q.b_.size());
  std::vector<Int> d(q.d_.size());
  std::vector<std::uint8_t> frozen(q.frozen_.size());
  for (int i = 0; i < n; ++i) {
    d[sigma(i)] = q.d_[i];
    frozen[sigma(i)] = q.frozen_[i];
    for (int j = 0; j < n; ++j) b[q.index(sigma(i), sigma(j))] = q.entry(i, j);
  }
  return ValuedQuiver(n, std::move(b), std::move(d), std::move(frozen));
}

ValuedQuiver negate(const ValuedQuiver& q) {
  std::vector<Int> b(q.b_.size());
  std::transform(q.b_.begin(), q.b_.end(), b.begin(), [](Int v) { return checked::neg(v); });
  return ValuedQuiver(q.n_, std::move(b), q.d_, q.frozen_);
}

ValuedQuiver restrict_to(const ValuedQuiver& q, std::span<const Vertex> keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptySubset, "mutable vertex subset is empty");
  std::vector<std::uint8_t> frozen(static_cast<std::size_t>(q.n_), 1);
  for (Vertex v : keep) {
    check_vertex(q, v);
    frozen[static_cast<std::size_t>(v)] = 0;
  }
  return ValuedQuiver(q.n_, q.b_, q.d_, std::move(frozen));
}

bool satisfies_witness(const ValuedQuiver& q, const ValuedQuiver& q2, const SymmetryWitness& w) {
  const int n = q.rank();
  if (q2.rank() != n || w.sigma.size() != n || (w.epsilon != 1 && w.epsilon != -1)) return false;
  for (int i = 0; i < n; ++i) {
    if (q2.symmetrizer(w.sigma(i)) != q.symmetrizer(i)) return false;
    for (int j = 0; j < n; ++j) {
      if (q2.entry(w.sigma(i), w.sigma(j)) != w.epsilon * q.entry(i, j)) return false;
    }
  }
  return true;
}

Int weight(const ValuedQuiver& q) {
  Int w = 0;
  for (int i = 0; i < q.rank(); ++i) {
    for (int j = i + 1; j < q.rank(); ++j) {
      w = std::max(w, checked::abs(checked::mul(q.entry(i, j), q.entry(j, i))));
    }
  }
  return w;
}

Int mutable_weight(const ValuedQuiver& q) {
  Int w = 0;
  for (int i = 0; i < q.rank(); ++i) {
    if (q.is_frozen(i)) continue;
    for (int j = i + 1; j < q.rank(); ++j) {
      if (q.is_frozen(j)) continue;
      w = std::max(w, checked::abs(checked::mul(q.entry(i, j), q.entry(j, i))));
    }
  }
  return w;
}

int degree(const ValuedQuiver& q, Vertex v) {
  check_vertex(q, v);
  int deg = 0;
  for (int j = 0; j < q.rank(); ++j) {
    if (j != v && q.entry(v, j) != 0) ++deg;
  }
  return deg;
}

bool is_leaf(const ValuedQuiver& q, Vertex v) { return degree(q, v) == 1; }

bool is_star(const ValuedQuiver& q) {
  const int n = q.rank();
  if (n <= 2) return false;
  int centres = 0;
  for (int v = 0; v < n; ++v) {
    const int deg = degree(q, v);
    if (deg == n - 1) {
      ++centres;
    } else if (deg != 1) {
      return false;
    }
  }
  // With n == 3 a path has one centre and two leaves; a triangle has three centres.
  return centres == 1;
}

FullyCyclic is_fully_cyclic(const ValuedQuiver& q) {
  const int n = q.rank();
  FullyCyclic out{true, true};
  for (int v = 0; v < n; ++v) {
    if (is_leaf(q, v)) out.leaf_free = false;
  }
  // v lies on a cycle iff some incident edge {u,v} is not a bridge.
  auto connected_without = [&](int u, int v) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{u};
    seen[u] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x == v) return true;
      for (int y = 0; y < n; ++y) {
        if (seen[y] || q.entry(x, y) == 0) continue;
        if ((x == u && y == v) || (x == v && y == u)) continue;
        seen[y] = true;
        stack.push_back(y);
      }
    }
    return false;
  };
  for (int v = 0; v < n && out.every_vertex_on_cycle; ++v) {
    bool on_cycle = false;
    for (int u = 0; u < n && !on_cycle; ++u) {
      if (u != v && q.entry(u, v) != 0 && connected_without(u, v)) on_cycle = true;
    }
    if (!on_cycle) out.every_vertex_on_cycle = false;
  }
  return out;
}

std::size_t hash_value(const ValuedQuiver& q) noexcept {
  // FNV-1a over the matrix, symmetrizer and frozen mask.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(q.rank()));
  for (Int v : q.entries()) mix(static_cast<std::uint64_t>(v));
  for (Int v : q.symmetrizer()) mix(static_cast<std::uint64_t>(v));
  for (int v = 0; v < q.rank(); ++v) mix(q.is_frozen(v) ? 1U : 0U);
  return static_cast<std::size_t>(h);
}

}  // namespace mutalab
