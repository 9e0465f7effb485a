#ifndef MUTALAB_QUIVER_HPP
#define MUTALAB_QUIVER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mutalab/checked.hpp"

namespace mutalab {

// Vertices are 0-based internally; the JSON/CLI surface is 1-based.
using Vertex = int;
using Matrix = std::vector<std::vector<Int>>;

/// A bijection of {0..n-1}; `image[i]` is the vertex that i is sent to.
class Permutation {
 public:
  Permutation() = default;
  /// Throws invalid-permutation unless `image` is a bijection of 0..size-1.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex i) const { return image_[static_cast<std::size_t>(i)]; }
  std::span<const Vertex> image() const noexcept { return image_; }
  bool is_identity() const noexcept;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

/// An edge i -> j of the quiver, read off the exchange matrix.
struct ValuedEdge {
  Vertex source = 0;
  Vertex target = 0;
  Int out_value = 0;  // d_ij = b_ij > 0
  Int in_value = 0;   // d_ji = -b_ji > 0

  Int weight() const { return checked::mul(out_value, in_value); }
  friend bool operator==(const ValuedEdge&, const ValuedEdge&) = default;
};

/// Certifies Q2 = epsilon * sigma(Q): b2[sigma i][sigma j] = epsilon * b[i][j]
/// and d2[sigma i] = d[i].
struct SymmetryWitness {
  Permutation sigma;
  int epsilon = 1;

  friend bool operator==(const SymmetryWitness&, const SymmetryWitness&) = default;
};

/// A valued quiver stored as its skew-symmetrizable exchange matrix together
/// with a positive symmetrizer. Values are immutable once built; every
/// operation below returns a fresh quiver.
///
/// Invariants: b[i][i] = 0; b[i][j] and b[j][i] are both zero or of opposite
/// sign; d[i] * b[i][j] = -d[j] * b[j][i]. Mutation never changes d.
///
/// A quiver may carry frozen vertices (see restrict_to). Frozen vertices keep
/// their edges but may not be mutated.
class ValuedQuiver {
 public:
  ValuedQuiver() = default;

  int rank() const noexcept { return n_; }
  Int entry(Vertex i, Vertex j) const { return b_[index(i, j)]; }
  Int symmetrizer(Vertex i) const { return d_[static_cast<std::size_t>(i)]; }
  std::span<const Int> symmetrizer() const noexcept { return d_; }
  /// Row-major n*n exchange matrix.
  std::span<const Int> entries() const noexcept { return b_; }
  Matrix matrix() const;

  bool is_frozen(Vertex v) const { return frozen_[static_cast<std::size_t>(v)] != 0; }
  bool has_frozen() const noexcept;
  std::vector<Vertex> mutable_vertices() const;
  std::vector<Vertex> frozen_vertices() const;

  friend bool operator==(const ValuedQuiver&, const ValuedQuiver&) = default;

 private:
  ValuedQuiver(int n, std::vector<Int> b, std::vector<Int> d, std::vector<std::uint8_t> frozen)
      : n_(n), b_(std::move(b)), d_(std::move(d)), frozen_(std::move(frozen)) {}

  std::size_t index(Vertex i, Vertex j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<Int> b_;
  std::vector<Int> d_;
  std::vector<std::uint8_t> frozen_;

  friend ValuedQuiver make_quiver(const Matrix&, std::optional<std::vector<Int>>);
  friend ValuedQuiver mutate(const ValuedQuiver&, Vertex);
  friend ValuedQuiver mutate_by_rules(const ValuedQuiver&, Vertex);
  friend ValuedQuiver permute(const ValuedQuiver&, const Permutation&);
  friend ValuedQuiver negate(const ValuedQuiver&);
  friend ValuedQuiver restrict_to(const ValuedQuiver&, std::span<const Vertex>);
};

/// Validates B (and d when given). Without d, picks the componentwise-least
/// positive symmetrizer: least integers per connected component, 1 on
/// isolated vertices.
ValuedQuiver make_quiver(const Matrix& b, std::optional<std::vector<Int>> d = std::nullopt);

/// Edges ordered by (source, target).
std::vector<ValuedEdge> edges(const ValuedQuiver& q);

/// Matrix mutation: b'_ij = -b_ij if k in {i,j}, else
/// b_ij + sign(b_ik) * max(0, b_ik * b_kj).
ValuedQuiver mutate(const ValuedQuiver& q, Vertex k);

/// Same result as mutate(), computed on the edge list with the valuation
/// rules (reverse at k, compose through k, resolve 3-cycles). Kept as an
/// independent engine for cross-checking.
ValuedQuiver mutate_by_rules(const ValuedQuiver& q, Vertex k);

/// b'[sigma i][sigma j] = b[i][j], d'[sigma i] = d[i].
ValuedQuiver permute(const ValuedQuiver& q, const Permutation& sigma);

ValuedQuiver negate(const ValuedQuiver& q);

/// Marks every vertex outside `keep` as frozen. Edge data is untouched.
ValuedQuiver restrict_to(const ValuedQuiver& q, std::span<const Vertex> keep);

enum class SignPolicy { Any, PositiveOnly };

/// Some (sigma, epsilon) with q2 = epsilon * sigma(q), or nullopt.
/// Deterministic: the lexicographically least sigma over both signs; when a
/// single sigma works for both signs, epsilon = +1.
std::optional<SymmetryWitness> symmetry_witness(const ValuedQuiver& q, const ValuedQuiver& q2,
                                                SignPolicy policy = SignPolicy::Any);

/// Checks the witness equations directly.
bool satisfies_witness(const ValuedQuiver& q, const ValuedQuiver& q2, const SymmetryWitness& w);

/// Maximum edge weight; 0 when there are no edges.
Int weight(const ValuedQuiver& q);
/// Weight counted only over edges between mutable vertices.
Int mutable_weight(const ValuedQuiver& q);

int degree(const ValuedQuiver& q, Vertex v);
bool is_leaf(const ValuedQuiver& q, Vertex v);
bool is_star(const ValuedQuiver& q);

struct FullyCyclic {
  bool leaf_free = false;              // no vertex has exactly one neighbour
  bool every_vertex_on_cycle = false;  // cycle membership in the underlying graph
  friend bool operator==(const FullyCyclic&, const FullyCyclic&) = default;
};
FullyCyclic is_fully_cyclic(const ValuedQuiver& q);

std::size_t hash_value(const ValuedQuiver& q) noexcept;

}  // namespace mutalab

template <>
struct std::hash<mutalab::ValuedQuiver> {
  std::size_t operator()(const mutalab::ValuedQuiver& q) const noexcept { return mutalab::hash_value(q); }
};

#endif  // MUTALAB_QUIVER_HPP
