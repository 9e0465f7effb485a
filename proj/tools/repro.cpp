#include "repro.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "mutalab/catalog.hpp"
#include "mutalab/decide.hpp"
#include "mutalab/loops.hpp"

namespace mutalab::repro {

namespace {

std::string spell(const MutationWord& w, const std::vector<std::string>& labels) {
  std::string out;
  for (Vertex v : w.letters()) out += labels[static_cast<std::size_t>(v)];
  return out;
}

MutationWord unspell(const std::string& text, const std::vector<std::string>& labels) {
  std::vector<Vertex> letters;
  for (char c : text) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == std::string(1, c)) letters.push_back(static_cast<Vertex>(i));
    }
  }
  return MutationWord(std::move(letters));
}

std::string describe_edges(const ValuedQuiver& q, const std::vector<std::string>& labels) {
  std::string out;
  for (const ValuedEdge& e : edges(q)) {
    if (!out.empty()) out += ", ";
    out += labels[static_cast<std::size_t>(e.source)] + "->" + labels[static_cast<std::size_t>(e.target)] + " (" +
           std::to_string(e.out_value) + "," + std::to_string(e.in_value) + ")";
  }
  return out.empty() ? "none" : out;
}

std::string describe_d(const ValuedQuiver& q) {
  std::string out = "(";
  for (int i = 0; i < q.rank(); ++i) out += (i ? "," : "") + std::to_string(q.symmetrizer(i));
  return out + ")";
}

std::size_t nontrivial_word_count(std::size_t m, std::size_t max_len) {
  std::size_t total = 0, level = m;
  for (std::size_t len = 1; len <= max_len; ++len, level *= (m - 1)) {
    if (len >= 2) total += level;
  }
  return total;
}

struct BlockOptions {
  std::size_t max_len = 4;
  std::vector<std::string> check_words;
  bool singles = false;
};

void block(std::ostream& os, const std::string& title, const CatalogEntry& e, const BlockOptions& opt) {
  const auto& labels = e.labels;
  const ExchangeGraph g = enumerate_class(e.quiver);
  os << title << "  " << e.spec() << "\n";
  os << "  edges     " << describe_edges(e.quiver, labels) << "\n";
  os << "  d         " << describe_d(e.quiver) << "\n";
  if (!g.verdict().finite()) {
    os << "  class     not finite (" << g.verdict().reason << ")\n\n";
    return;
  }
  const ClassReport r = class_report(g);
  os << "  class     " << r.size << " labelled quivers, " << r.distinct_up_to_permutation << " up to permutation, "
     << r.distinct_up_to_symmetry << " up to sign and permutation; weight " << r.class_weight << "; leaf-free "
     << (r.fully_cyclic_class.leaf_free ? "yes" : "no") << "\n";
  const LoopVerdict v = decide_global_loops(e.quiver);
  os << "  decision  " << to_string(v.kind) << " [" << v.rule << "]\n";

  const auto certs = search_global_loops(g, opt.max_len);
  const std::size_t total = nontrivial_word_count(e.quiver.mutable_vertices().size(), opt.max_len);
  os << "  loops     " << certs.size() << " of " << total << " reduced words of length <= " << opt.max_len
     << " with two or more letters";
  if (certs.size() == total && total > 0) {
    os << " (every word)\n";
  } else if (certs.empty()) {
    os << "\n";
  } else {
    os << ":";
    std::size_t shown = 0;
    for (const auto& c : certs) {
      if (shown++ == 24) {
        os << " ...";
        break;
      }
      os << " " << spell(c.word, labels);
    }
    os << "\n";
  }
  for (const std::string& text : opt.check_words) {
    const GlobalLoopResult res = global_loop_certificate(g, unspell(text, labels));
    os << "  check     " << text << ": ";
    if (res.certificate) {
      os << "certified";
    } else if (res.trivial) {
      os << "trivial";
    } else {
      os << "fails at class member " << *res.failing_node;
    }
    os << "\n";
  }
  if (opt.singles) {
    os << "  singles   symmetric loop on every member:";
    bool any = false;
    for (Vertex k : e.quiver.mutable_vertices()) {
      const MutationWord w{k};
      const bool all = std::all_of(g.nodes().begin(), g.nodes().end(),
                                   [&](const ValuedQuiver& q) { return word_symmetry(q, w).has_value(); });
      if (all) {
        os << " " << labels[static_cast<std::size_t>(k)];
        any = true;
      }
    }
    os << (any ? "\n" : " none\n");
  }
  os << "\n";
}

std::string table_1_2() {
  std::ostringstream os;
  os << "Rank 3 classes of weight 4 and their global loops\n"
     << "(words are read left to right; the first letter is applied first)\n\n";
  for (int row = 1; row <= 4; ++row) {
    BlockOptions opt;
    opt.max_len = (row == 1 || row == 4) ? 5 : 4;
    opt.check_words = {"ijki", "ikji"};
    block(os, "row " + std::to_string(row), build_entry("Table12_row", {row}), opt);
  }
  BlockOptions opt;
  opt.max_len = 6;
  block(os, "exceptional cycle", build_entry("Lemma33_exceptional"), opt);
  return os.str();
}

std::string table_1_4() {
  std::ostringstream os;
  os << "Fully cyclic classes of weight 4 and their global loops\n\n";
  const std::vector<std::vector<std::string>> listed = {{}, {"ki", "ik", "jv", "vj"}, {}};
  for (int row = 1; row <= 3; ++row) {
    BlockOptions opt;
    opt.max_len = row == 1 ? 2 : 4;
    opt.check_words = listed[static_cast<std::size_t>(row - 1)];
    opt.singles = true;
    block(os, "row " + std::to_string(row), build_entry("Table14_row", {row}), opt);
  }
  return os.str();
}

// Vertices in path order when the underlying graph is a single path
// starting at its lowest-numbered end; empty otherwise.
std::vector<Vertex> path_order(const ValuedQuiver& q) {
  const int n = q.rank();
  std::vector<Vertex> ends;
  for (Vertex v = 0; v < n; ++v) {
    const int deg = degree(q, v);
    if (deg == 0 || deg > 2) return {};
    if (deg == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return {};
  std::vector<Vertex> order{ends[0]};
  Vertex prev = -1;
  while (static_cast<int>(order.size()) < n) {
    const Vertex cur = order.back();
    Vertex next = -1;
    for (Vertex w = 0; w < n; ++w) {
      if (w != prev && w != cur && q.entry(cur, w) != 0) next = w;
    }
    if (next < 0) return {};
    prev = cur;
    order.push_back(next);
  }
  return order;
}

std::string example_2_8() {
  std::ostringstream os;
  os << "Item 1: restricted mutation\n";
  const CatalogEntry full = build_entry("Example_2_8_1");
  os << "  edges     " << describe_edges(full.quiver, full.labels) << "\n";
  os << "  d         " << describe_d(full.quiver) << "\n";
  std::string frozen;
  for (Vertex v : full.quiver.frozen_vertices()) frozen += (frozen.empty() ? "" : ",") + std::to_string(v + 1);
  os << "  frozen    " << frozen << "\n";
  const ValuedQuiver mu = mutate(full.quiver, 1);
  os << "  mu_2      " << describe_edges(mu, full.labels) << "\n";
  const CatalogEntry sub = build_entry("Example_2_8_1_sub");
  os << "  Q_I       " << describe_edges(sub.quiver, sub.labels) << "; d " << describe_d(sub.quiver) << "; rank "
     << sub.quiver.rank() << "; weight " << weight(sub.quiver) << "\n";
  const ValuedQuiver sub_mu = mutate(sub.quiver, 1);
  os << "  mu_2(Q_I) B =";
  for (const auto& row : sub_mu.matrix()) {
    os << " [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
    os << "]";
  }
  os << "\n";
  os << "  rules     mutate_by_rules agrees: " << (mutate_by_rules(full.quiver, 1) == mu ? "yes" : "no") << "\n\n";

  os << "Item 2: moving the weight 2 edge along path_B(6)\n";
  // d never changes, so the edge keeps the d=1 vertex as one end and, in a
  // path shaped member, that vertex is always a leaf. What moves is the
  // labelled vertex at the other end of the edge.
  const CatalogEntry path = build_entry("path_B", {6});
  const ExchangeGraph g = enumerate_class(path.quiver);
  const int n = path.quiver.rank();
  std::size_t shaped = 0, interior = 0;
  std::vector<std::optional<std::size_t>> first(static_cast<std::size_t>(n));
  for (std::size_t u = 0; u < g.size(); ++u) {
    const ValuedQuiver& q = g.node(u);
    const std::vector<Vertex> order = path_order(q);
    if (order.empty()) continue;
    ++shaped;
    for (int p = 0; p + 1 < n; ++p) {
      const Vertex a = order[static_cast<std::size_t>(p)], b = order[static_cast<std::size_t>(p + 1)];
      if (checked::abs(checked::mul(q.entry(a, b), q.entry(b, a))) != 2) continue;
      if (p != 0 && p != n - 2) ++interior;
      const Vertex partner = q.symmetrizer(a) == 1 ? b : a;
      auto& slot = first[static_cast<std::size_t>(partner)];
      if (!slot) slot = u;
    }
  }
  os << "  path shaped members " << shaped << "; with the weight 2 edge inside the path " << interior << "\n";
  for (Vertex v = 0; v < n; ++v) {
    if (path.quiver.symmetrizer(v) == 1) continue;
    os << "  edge on vertex " << path.labels[static_cast<std::size_t>(v)] << ": ";
    const auto& slot = first[static_cast<std::size_t>(v)];
    if (!slot) {
      os << "not reached\n";
      continue;
    }
    const MutationWord w = g.path_to(*slot);
    os << (w.empty() ? std::string("seed") : "word " + spell(w, path.labels)) << "  ->  "
       << describe_edges(g.node(*slot), path.labels) << "\n";
  }
  return os.str();
}

std::string example_3_2() {
  std::ostringstream os;
  os << "Item 1: rank 2\n";
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {1, 4}}) {
    const CatalogEntry e = build_entry("Rank2", {a, b});
    std::size_t words = 0, identity = 0;
    for (std::size_t len = 1; len <= 6; ++len) {
      for (Vertex first = 0; first < 2; ++first) {
        std::vector<Vertex> letters;
        for (std::size_t i = 0; i < len; ++i) letters.push_back(static_cast<Vertex>((first + i) % 2));
        const auto w = word_symmetry(e.quiver, MutationWord(letters));
        ++words;
        if (w && w->sigma.is_identity() && w->epsilon == (len % 2 ? -1 : 1)) ++identity;
      }
    }
    os << "  " << e.spec() << ": class size " << enumerate_class(e.quiver).size() << "; " << identity << " of " << words
       << " reduced words of length <= 6 act as (-1)^length with sigma = id\n";
  }
  os << "\n";
  os << "Item 2: periodic rank 3\n";
  BlockOptions periodic;
  periodic.max_len = 5;
  block(os, "  Markov", build_entry("Markov4"), periodic);

  os << "Item 3\n";
  BlockOptions three;
  three.max_len = 2;
  three.check_words = {"ki", "ik", "vj", "jv"};
  block(os, "  four vertices", build_entry("Example_3_2_3"), three);

  os << "Item 4\n";
  BlockOptions four;
  four.max_len = 2;
  four.singles = true;
  block(os, "  five vertices", build_entry("Example_3_2_4", {1}), four);
  block(os, "  five vertices", build_entry("Example_3_2_4", {2}), four);
  return os.str();
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"table-1.2", "table-1.4", "example-2.8", "example-3.2"};
  return n;
}

std::string render(const std::string& name) {
  if (name == "table-1.2") return table_1_2();
  if (name == "table-1.4") return table_1_4();
  if (name == "example-2.8") return example_2_8();
  if (name == "example-3.2") return example_3_2();
  throw Error(ErrorCode::UnknownName, "no reproduction named '" + name + "'");
}

}  // namespace mutalab::repro
