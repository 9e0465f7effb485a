#include "mutalab/decide.hpp"

#include <algorithm>
#include <optional>

#include "mutalab/catalog.hpp"

namespace mutalab {

std::string to_string(LoopVerdictKind kind) {
  switch (kind) {
    case LoopVerdictKind::HasNontrivialGlobalLoops: return "HasNontrivialGlobalLoops";
    case LoopVerdictKind::NoGlobalLoops: return "NoGlobalLoops";
    case LoopVerdictKind::EveryWordIsGlobalLoop: return "EveryWordIsGlobalLoop";
    case LoopVerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

LoopVerdict verdict(LoopVerdictKind kind, std::string rule, std::string reason) {
  return {kind, std::move(rule), std::move(reason)};
}

bool class_contains_exceptional_cycle(const ExchangeGraph& g) {
  const ValuedQuiver exceptional = build("Lemma33_exceptional");
  return std::any_of(g.nodes().begin(), g.nodes().end(), [&](const ValuedQuiver& x) {
    return x.rank() == 3 && symmetry_witness(exceptional, x).has_value();
  });
}

// Rank >= 4 rules that need a single witness quiver in the class.
std::optional<LoopVerdict> member_rules(const ExchangeGraph& g, const std::string& where) {
  const auto& nodes = g.nodes();
  if (std::any_of(nodes.begin(), nodes.end(), [](const ValuedQuiver& x) { return is_star(x); })) {
    return verdict(LoopVerdictKind::NoGlobalLoops, "star-in-class", "class contains a star quiver" + where);
  }
  if (std::any_of(nodes.begin(), nodes.end(), [](const ValuedQuiver& x) { return weight(x) <= 1; })) {
    return verdict(LoopVerdictKind::NoGlobalLoops, "simply-laced-in-class",
                   "class contains a simply laced quiver" + where);
  }
  return std::nullopt;
}

}  // namespace

LoopVerdict decide_global_loops(const ValuedQuiver& q, const ClassLimits& limits) {
  using K = LoopVerdictKind;
  const std::size_t rank = q.mutable_vertices().size();
  if (rank <= 1) return verdict(K::NoGlobalLoops, "rank-one", "no word uses two distinct letters");
  if (rank == 2) {
    return verdict(K::EveryWordIsGlobalLoop, "rank-two", "each mutation negates a rank 2 exchange matrix");
  }

  const ExchangeGraph g = enumerate_class(q, limits);
  switch (g.verdict().kind) {
    case VerdictKind::InfiniteWeightWitness:
      return verdict(K::NoGlobalLoops, "infinite-type", "class is of infinite mutation type: " + g.verdict().reason);
    case VerdictKind::Inconclusive:
      // A star or simply laced member rules loops out whether or not the
      // class is finite, so a partial enumeration can still decide.
      if (rank >= 4) {
        if (auto v = member_rules(g, " among the explored members")) return *v;
      }
      return verdict(K::Inconclusive, "class-budget", g.verdict().reason);
    case VerdictKind::Finite: break;
  }
  const ClassReport report = class_report(g);
  const Int w = report.class_weight;
  const std::string wtext = "class weight " + std::to_string(w);

  if (rank == 3) {
    if (w <= 2) return verdict(K::NoGlobalLoops, "rank-three-low-weight", wtext);
    if (w == 4) {
      if (class_contains_exceptional_cycle(g)) {
        return verdict(K::NoGlobalLoops, "rank-three-exceptional-cycle",
                       "class contains the (1,3)/(2,2)/(3,1) cycle");
      }
      return verdict(K::HasNontrivialGlobalLoops, "rank-three-weight-four", wtext);
    }
    return verdict(K::Inconclusive, "rank-three-unresolved", wtext + " is not covered");
  }

  if (auto v = member_rules(g, "")) return *v;
  if (w <= 2) return verdict(K::NoGlobalLoops, "low-weight", wtext);
  if (w == 4) {
    if (report.fully_cyclic_class.leaf_free) {
      return verdict(K::HasNontrivialGlobalLoops, "weight-four-fully-cyclic", "every class member is leaf-free");
    }
    return verdict(K::NoGlobalLoops, "weight-four-not-fully-cyclic", "some class member has a leaf");
  }
  return verdict(K::Inconclusive, "unresolved", wtext + " is not covered");
}

CrossValidation cross_validate(const ValuedQuiver& q, std::size_t max_len, const ClassLimits& limits,
                               const SearchOptions& opts) {
  CrossValidation out;
  out.verdict = decide_global_loops(q, limits);
  const ExchangeGraph g = enumerate_class(q, limits, opts.threads);
  if (!g.verdict().finite()) {
    out.agree = out.verdict.kind == LoopVerdictKind::NoGlobalLoops;
    out.note = "class not finite; search not run";
    return out;
  }
  std::vector<LoopCertificate> certs;
  try {
    certs = search_global_loops(g, max_len, opts);
  } catch (const Error& e) {
    out.note = e.what();
    return out;
  }
  out.searched = true;
  out.certificates = certs.size();
  const std::string upto = " up to length " + std::to_string(max_len);
  switch (out.verdict.kind) {
    case LoopVerdictKind::HasNontrivialGlobalLoops:
      out.agree = !certs.empty();
      out.note = out.agree ? "consistent" + upto : "no certificate found" + upto;
      break;
    case LoopVerdictKind::NoGlobalLoops:
      out.agree = certs.empty();
      out.note = out.agree ? "consistent" + upto : "search certified " + std::to_string(certs.size()) + " word(s)" + upto;
      break;
    case LoopVerdictKind::EveryWordIsGlobalLoop: {
      // Reduced words with at least two distinct letters, counted directly.
      const std::size_t m = q.mutable_vertices().size();
      std::size_t expected = 0, level = m;
      for (std::size_t len = 1; len <= max_len; ++len, level *= (m - 1)) {
        if (len >= 2) expected += level;
      }
      out.agree = certs.size() == expected;
      out.note = std::to_string(certs.size()) + " of " + std::to_string(expected) + " words certified" + upto;
      break;
    }
    case LoopVerdictKind::Inconclusive:
      out.agree = false;
      out.note = "verdict inconclusive; " + std::to_string(certs.size()) + " certificate(s)" + upto;
      break;
  }
  return out;
}

}  // namespace mutalab
