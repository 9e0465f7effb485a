#ifndef MUTALAB_DECIDE_HPP
#define MUTALAB_DECIDE_HPP

#include <cstddef>
#include <string>

#include "mutalab/exchange_graph.hpp"
#include "mutalab/loops.hpp"

namespace mutalab {

enum class LoopVerdictKind { HasNontrivialGlobalLoops, NoGlobalLoops, EveryWordIsGlobalLoop, Inconclusive };

std::string to_string(LoopVerdictKind kind);

struct LoopVerdict {
  LoopVerdictKind kind = LoopVerdictKind::Inconclusive;
  // Short identifier of the rule that fired, e.g. "star-in-class".
  std::string rule;
  std::string reason;
};

/// Classifies [q] by rank, finiteness, class weight, stars and the fully
/// cyclic property. Budget failures come back as Inconclusive. Rank here
/// counts mutable vertices.
LoopVerdict decide_global_loops(const ValuedQuiver& q, const ClassLimits& limits = {});

struct CrossValidation {
  LoopVerdict verdict;
  std::size_t certificates = 0;
  bool searched = false;
  bool agree = false;
  std::string note;
};

/// Runs the decision procedure and the bounded search side by side. Agreement
/// is evidence up to max_len only.
CrossValidation cross_validate(const ValuedQuiver& q, std::size_t max_len, const ClassLimits& limits = {},
                               const SearchOptions& opts = {});

}  // namespace mutalab

#endif  // MUTALAB_DECIDE_HPP
