#include <map>
#include <string>
#include <utility>

#include "mutalab/quiver.hpp"

namespace mutalab {

namespace {

// Arrow (source, target) -> valuation (v_st, v_ts), both positive.
using Arrow = std::pair<Vertex, Vertex>;
using Valuation = std::pair<Int, Int>;
using ArrowMap = std::map<Arrow, Valuation>;

ArrowMap arrows_of(const ValuedQuiver& q) {
  ArrowMap out;
  for (const ValuedEdge& e : edges(q)) out[{e.source, e.target}] = {e.out_value, e.in_value};
  return out;
}

}  // namespace

// Works on the valued edge list only; never evaluates the matrix formula.
ValuedQuiver mutate_by_rules(const ValuedQuiver& q, Vertex k) {
  if (k < 0 || k >= q.rank()) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(k + 1) + " not in 1.." + std::to_string(q.rank()));
  }
  if (q.is_frozen(k)) throw Error(ErrorCode::MutateAtFrozenVertex, "vertex " + std::to_string(k + 1) + " is frozen");

  const ArrowMap before = arrows_of(q);
  ArrowMap after = before;

  // Compose every path i -> k -> j.
  for (const auto& [in_arrow, in_val] : before) {
    if (in_arrow.second != k) continue;
    const Vertex i = in_arrow.first;
    for (const auto& [out_arrow, out_val] : before) {
      if (out_arrow.first != k) continue;
      const Vertex j = out_arrow.second;
      if (i == j) continue;
      // p = v_ik * v_kj, r = v_ki * v_jk
      const Int p = checked::mul(in_val.first, out_val.first);
      const Int r = checked::mul(in_val.second, out_val.second);

      if (auto same = before.find({i, j}); same != before.end()) {
        after[{i, j}] = {checked::add(same->second.first, p), checked::add(same->second.second, r)};
      } else if (auto opposite = before.find({j, i}); opposite != before.end()) {
        // Existing j -> i with valuation (v_ji, v_ij) closes a 3-cycle.
        const Int v_ji = opposite->second.first;
        const Int v_ij = opposite->second.second;
        after.erase({j, i});
        if (p < v_ij) {
          after[{j, i}] = {checked::sub(v_ji, r), checked::sub(v_ij, p)};
        } else if (p > v_ij) {
          after[{i, j}] = {checked::sub(p, v_ij), checked::abs(checked::sub(v_ji, r))};
        }
        // p == v_ij: the arrow disappears.
      } else {
        after[{i, j}] = {p, r};
      }
    }
  }

  // Reverse every arrow at k, swapping its valuation.
  ArrowMap result;
  for (const auto& [arrow, val] : after) {
    if (arrow.first == k || arrow.second == k) {
      result[{arrow.second, arrow.first}] = {val.second, val.first};
    } else {
      result[arrow] = val;
    }
  }

  const int n = q.rank();
  std::vector<Int> b(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& [arrow, val] : result) {
    b[static_cast<std::size_t>(arrow.first * n + arrow.second)] = val.first;
    b[static_cast<std::size_t>(arrow.second * n + arrow.first)] = checked::neg(val.second);
  }
  std::vector<Int> d(q.symmetrizer().begin(), q.symmetrizer().end());
  std::vector<std::uint8_t> frozen(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) frozen[v] = q.is_frozen(v) ? 1 : 0;
  return ValuedQuiver(n, std::move(b), std::move(d), std::move(frozen));
}

}  // namespace mutalab
