#include "mutalab/exchange_graph.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <thread>

namespace mutalab {

void validate(const ClassLimits& limits) {
  if (limits.max_nodes == 0 || limits.max_weight <= 0) {
    throw Error(ErrorCode::InvalidLimits, "max_nodes and max_weight must be positive");
  }
}

std::vector<Arc> ExchangeGraph::arcs() const {
  std::vector<Arc> out;
  for (std::size_t a = 0; a < nodes_.size(); ++a) {
    for (Vertex k = 0; k < rank_; ++k) {
      const std::ptrdiff_t b = successor(a, k);
      if (b != kNoArc) out.push_back({a, k, static_cast<std::size_t>(b)});
    }
  }
  return out;
}

std::optional<std::size_t> ExchangeGraph::index_of(const ValuedQuiver& q) const {
  auto [first, last] = by_hash_.equal_range(hash_value(q));
  for (auto it = first; it != last; ++it) {
    if (nodes_[it->second] == q) return it->second;
  }
  return std::nullopt;
}

MutationWord ExchangeGraph::path_to(std::size_t node) const {
  std::vector<Vertex> letters;
  for (std::ptrdiff_t at = static_cast<std::ptrdiff_t>(node); parent_.at(static_cast<std::size_t>(at)) >= 0;
       at = parent_[static_cast<std::size_t>(at)]) {
    letters.push_back(parent_letter_[static_cast<std::size_t>(at)]);
  }
  std::reverse(letters.begin(), letters.end());
  return MutationWord(std::move(letters));
}

class ClassEnumerator {
 public:
  ClassEnumerator(const ValuedQuiver& seed, const ClassLimits& limits, unsigned threads)
      : seed_(seed), threads_(std::max(1U, threads)), directions_(seed.mutable_vertices()) {
    g_.rank_ = seed.rank();
    g_.limits_ = limits;
    guarded_ = directions_.size() >= 3;
  }

  ExchangeGraph run() {
    add_node(seed_, -1, 0);
    if (guarded_) {
      if (const Int w = mutable_weight(seed_); w > g_.limits_.max_weight) {
        stop_infinite(MutationWord{}, w);
        return std::move(g_);
      }
    }
    // Level-synchronous BFS: children of a block are computed (possibly in
    // parallel) and then committed in (parent, k) order.
    constexpr std::size_t kBlock = 2048;
    std::size_t level_begin = 0;
    while (level_begin < g_.nodes_.size()) {
      const std::size_t level_end = g_.nodes_.size();
      for (std::size_t block = level_begin; block < level_end; block += kBlock) {
        const std::size_t block_end = std::min(block + kBlock, level_end);
        expand(block, block_end);
        if (!commit(block, block_end)) return std::move(g_);
      }
      level_begin = level_end;
    }
    g_.verdict_.kind = VerdictKind::Finite;
    return std::move(g_);
  }

 private:
  struct Child {
    std::optional<ValuedQuiver> quiver;
    std::exception_ptr error;
  };

  void expand(std::size_t begin, std::size_t end) {
    const std::size_t dirs = directions_.size();
    children_.assign((end - begin) * dirs, Child{});
    auto work = [&](std::size_t worker, std::size_t workers) {
      for (std::size_t slot = worker; slot < children_.size(); slot += workers) {
        const std::size_t u = begin + slot / dirs;
        try {
          children_[slot].quiver = mutate(g_.nodes_[u], directions_[slot % dirs]);
        } catch (...) {
          children_[slot].error = std::current_exception();
        }
      }
    };
    const std::size_t workers = std::min<std::size_t>(threads_, children_.size());
    if (workers <= 1) {
      work(0, 1);
      return;
    }
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  bool commit(std::size_t begin, std::size_t end) {
    const std::size_t dirs = directions_.size();
    for (std::size_t u = begin; u < end; ++u) {
      for (std::size_t di = 0; di < dirs; ++di) {
        Child& child = children_[(u - begin) * dirs + di];
        if (child.error) std::rethrow_exception(child.error);
        const Vertex k = directions_[di];
        ValuedQuiver& q = *child.quiver;
        std::ptrdiff_t target;
        if (auto found = g_.index_of(q)) {
          target = static_cast<std::ptrdiff_t>(*found);
        } else {
          if (guarded_) {
            if (const Int w = mutable_weight(q); w > g_.limits_.max_weight) {
              MutationWord path = g_.path_to(u);
              path.push_back(k);
              stop_infinite(std::move(path), w);
              return false;
            }
          }
          if (g_.nodes_.size() >= g_.limits_.max_nodes) {
            g_.verdict_.kind = VerdictKind::Inconclusive;
            g_.verdict_.reason = "node budget of " + std::to_string(g_.limits_.max_nodes) + " exhausted";
            return false;
          }
          target = static_cast<std::ptrdiff_t>(g_.nodes_.size());
          add_node(std::move(q), static_cast<std::ptrdiff_t>(u), k);
        }
        g_.successors_[u * static_cast<std::size_t>(g_.rank_) + static_cast<std::size_t>(k)] = target;
      }
    }
    return true;
  }

  void add_node(ValuedQuiver q, std::ptrdiff_t parent, Vertex letter) {
    const std::size_t index = g_.nodes_.size();
    g_.by_hash_.emplace(hash_value(q), index);
    g_.nodes_.push_back(std::move(q));
    g_.parent_.push_back(parent);
    g_.parent_letter_.push_back(letter);
    g_.successors_.resize(g_.successors_.size() + static_cast<std::size_t>(g_.rank_), ExchangeGraph::kNoArc);
  }

  void stop_infinite(MutationWord path, Int w) {
    g_.verdict_.kind = VerdictKind::InfiniteWeightWitness;
    g_.verdict_.path = std::move(path);
    g_.verdict_.offending_weight = w;
    g_.verdict_.reason = "edge weight " + std::to_string(w) + " exceeds " + std::to_string(g_.limits_.max_weight);
  }

  const ValuedQuiver& seed_;
  unsigned threads_;
  std::vector<Vertex> directions_;
  bool guarded_ = false;
  ExchangeGraph g_;
  std::vector<Child> children_;
};

ExchangeGraph enumerate_class(const ValuedQuiver& q, const ClassLimits& limits, unsigned threads) {
  validate(limits);
  return ClassEnumerator(q, limits, threads).run();
}

Verdict is_finite_mutation_type(const ValuedQuiver& q, const ClassLimits& limits) {
  return enumerate_class(q, limits).verdict();
}

namespace {

// Cheap invariant shared by witness-equivalent quivers of either sign.
std::vector<std::pair<Int, std::vector<std::pair<Int, Int>>>> coarse_invariant(const ValuedQuiver& q) {
  std::vector<std::pair<Int, std::vector<std::pair<Int, Int>>>> out;
  for (int i = 0; i < q.rank(); ++i) {
    std::vector<std::pair<Int, Int>> incident;
    for (int j = 0; j < q.rank(); ++j) {
      if (q.entry(i, j) != 0) incident.emplace_back(checked::abs(q.entry(i, j)), checked::abs(q.entry(j, i)));
    }
    std::sort(incident.begin(), incident.end());
    out.emplace_back(q.symmetrizer(i), std::move(incident));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::size_t count_up_to_symmetry(const std::vector<ValuedQuiver>& quivers, SignPolicy policy) {
  std::map<std::vector<std::pair<Int, std::vector<std::pair<Int, Int>>>>, std::vector<std::size_t>> buckets;
  std::size_t classes = 0;
  for (std::size_t i = 0; i < quivers.size(); ++i) {
    auto& reps = buckets[coarse_invariant(quivers[i])];
    const bool known = std::any_of(reps.begin(), reps.end(), [&](std::size_t r) {
      return symmetry_witness(quivers[r], quivers[i], policy).has_value();
    });
    if (!known) {
      reps.push_back(i);
      ++classes;
    }
  }
  return classes;
}

ClassReport class_report(const ExchangeGraph& g) {
  if (!g.verdict().finite()) throw Error(ErrorCode::ClassNotFinite, "class report needs a Finite exchange graph");
  ClassReport r;
  r.size = g.size();
  r.fully_cyclic_class = {true, true};
  for (const ValuedQuiver& q : g.nodes()) {
    r.class_weight = std::max(r.class_weight, mutable_weight(q));
    const FullyCyclic fc = is_fully_cyclic(q);
    r.fully_cyclic_class.leaf_free = r.fully_cyclic_class.leaf_free && fc.leaf_free;
    r.fully_cyclic_class.every_vertex_on_cycle =
        r.fully_cyclic_class.every_vertex_on_cycle && fc.every_vertex_on_cycle;
  }
  r.distinct_up_to_symmetry = count_up_to_symmetry(g.nodes(), SignPolicy::Any);
  r.distinct_up_to_permutation = count_up_to_symmetry(g.nodes(), SignPolicy::PositiveOnly);
  return r;
}

}  // namespace mutalab
