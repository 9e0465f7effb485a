#ifndef MUTALAB_EXCHANGE_GRAPH_HPP
#define MUTALAB_EXCHANGE_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mutalab/quiver.hpp"
#include "mutalab/word.hpp"

namespace mutalab {

struct ClassLimits {
  std::size_t max_nodes = 100000;
  // Edge weights above this bound are treated as an infinite-type witness
  // at rank >= 3.
  Int max_weight = 4;
};

/// Throws invalid-limits unless both limits are positive.
void validate(const ClassLimits& limits);

enum class VerdictKind { Finite, InfiniteWeightWitness, Inconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  // InfiniteWeightWitness: mutation path from the seed to the offending
  // quiver, and its weight.
  MutationWord path;
  Int offending_weight = 0;
  std::string reason;

  bool finite() const noexcept { return kind == VerdictKind::Finite; }
};

struct Arc {
  std::size_t from = 0;
  Vertex k = 0;
  std::size_t to = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// The mutation class explored breadth-first from a seed. Node 0 is the seed;
/// nodes are numbered in discovery order with children taken by ascending k.
/// Nodes are pairwise distinct as exact (B, d) values.
class ExchangeGraph {
 public:
  static constexpr std::ptrdiff_t kNoArc = -1;

  const std::vector<ValuedQuiver>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const ValuedQuiver& node(std::size_t i) const { return nodes_.at(i); }
  const ValuedQuiver& seed() const { return nodes_.front(); }
  int rank() const noexcept { return rank_; }

  /// Target of the arc (node, k); kNoArc for frozen or unexplored directions.
  std::ptrdiff_t successor(std::size_t node, Vertex k) const {
    return successors_[node * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(k)];
  }
  std::vector<Arc> arcs() const;

  std::optional<std::size_t> index_of(const ValuedQuiver& q) const;

  /// Shortest word from the seed along the BFS tree.
  MutationWord path_to(std::size_t node) const;

  const Verdict& verdict() const noexcept { return verdict_; }
  const ClassLimits& limits() const noexcept { return limits_; }

 private:
  friend class ClassEnumerator;

  int rank_ = 0;
  std::vector<ValuedQuiver> nodes_;
  std::vector<std::ptrdiff_t> successors_;
  std::vector<std::ptrdiff_t> parent_;
  std::vector<Vertex> parent_letter_;
  std::unordered_multimap<std::size_t, std::size_t> by_hash_;
  Verdict verdict_;
  ClassLimits limits_;
};

/// Breadth-first enumeration of [Q] over every mutable direction.
///
/// Stops with InfiniteWeightWitness as soon as a quiver of rank >= 3 (counted
/// over mutable vertices) has a mutable edge heavier than limits.max_weight,
/// and with Inconclusive when limits.max_nodes would be exceeded. With
/// `threads > 1` each BFS level is expanded in parallel and committed
/// sequentially, so numbering and verdict match the single-threaded run.
ExchangeGraph enumerate_class(const ValuedQuiver& q, const ClassLimits& limits = {}, unsigned threads = 1);

/// Thin wrapper over enumerate_class returning only the verdict.
Verdict is_finite_mutation_type(const ValuedQuiver& q, const ClassLimits& limits = {});

struct ClassReport {
  std::size_t size = 0;
  Int class_weight = 0;
  FullyCyclic fully_cyclic_class;
  // Equivalence classes under Q ~ +-sigma(Q).
  std::size_t distinct_up_to_symmetry = 0;
  // Equivalence classes under Q ~ sigma(Q) (vertex relabelling only).
  std::size_t distinct_up_to_permutation = 0;
};

/// Throws class-not-finite unless the graph's verdict is Finite.
ClassReport class_report(const ExchangeGraph& g);

/// Number of classes of `quivers` under witness equivalence with the given
/// sign policy.
std::size_t count_up_to_symmetry(const std::vector<ValuedQuiver>& quivers, SignPolicy policy);

}  // namespace mutalab

#endif  // MUTALAB_EXCHANGE_GRAPH_HPP
