#ifndef MUTALAB_LOOPS_HPP
#define MUTALAB_LOOPS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mutalab/exchange_graph.hpp"
#include "mutalab/quiver.hpp"
#include "mutalab/word.hpp"

namespace mutalab {

enum class LoopStatus {
  // Reduced word is empty or uses a single letter.
  Trivial,
  SymmetricLoop,
  NotALoop,
};

struct LoopCheck {
  LoopStatus status = LoopStatus::NotALoop;
  MutationWord reduced;
  std::optional<SymmetryWitness> witness;
};

/// Reduces w, then looks for (sigma, eps) with apply(q, w) = eps * sigma(q).
LoopCheck symmetric_loop_witness(const ValuedQuiver& q, const MutationWord& w);

/// Same search with no triviality filter; single letters and the empty word
/// are answered too.
std::optional<SymmetryWitness> word_symmetry(const ValuedQuiver& q, const MutationWord& w);

struct NodeWitness {
  std::size_t node = 0;
  SymmetryWitness witness;
  friend bool operator==(const NodeWitness&, const NodeWitness&) = default;
};

struct LoopCertificate {
  MutationWord word;
  // One entry per exchange-graph node, ascending by node.
  std::vector<NodeWitness> witnesses;
  bool homogeneous = false;
  bool full = false;
  friend bool operator==(const LoopCertificate&, const LoopCertificate&) = default;
};

struct GlobalLoopResult {
  std::optional<LoopCertificate> certificate;
  // Set when some node has no witness.
  std::optional<std::size_t> failing_node;
  bool trivial = false;
};

/// Checks w on every node of a Finite graph. Throws class-not-finite.
GlobalLoopResult global_loop_certificate(const ExchangeGraph& g, const MutationWord& w);

struct CertificateCheck {
  bool ok = false;
  std::optional<std::size_t> failing_node;
  std::string message;
};

/// Re-verifies a certificate from scratch: mutate() along the word on each
/// node, then check the witness equations. Never consults the successor table.
CertificateCheck verify_certificate(const ExchangeGraph& g, const LoopCertificate& cert);

struct SearchOptions {
  std::size_t max_words = 10'000'000;
  unsigned threads = 1;
};

/// Every reduced word of length <= max_len with at least two distinct letters
/// that is a global loop of [q], in shortlex order. Throws class-not-finite,
/// budget-exceeded.
std::vector<LoopCertificate> search_global_loops(const ValuedQuiver& q, std::size_t max_len,
                                                 const ClassLimits& limits = {}, const SearchOptions& opts = {});
std::vector<LoopCertificate> search_global_loops(const ExchangeGraph& g, std::size_t max_len,
                                                 const SearchOptions& opts = {});

struct Realization {
  std::optional<MutationWord> word;
  // Every class member has weight <= 1.
  bool simply_laced_class = false;
};

/// Shortest word w with apply(q, w) = sigma(q), if one of length <= max_len
/// exists. Throws class-not-finite.
Realization realize_permutation(const ValuedQuiver& q, const Permutation& sigma, std::size_t max_len,
                                const ClassLimits& limits = {});

}  // namespace mutalab

#endif  // MUTALAB_LOOPS_HPP
