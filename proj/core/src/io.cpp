#include "mutalab/io.hpp"

#include <fstream>
#include <sstream>

namespace mutalab::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedJson, what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) malformed("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

Int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) malformed(std::string(what) + " must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    malformed(std::string(what) + " out of range");
  }
  return v.get<Int>();
}

std::vector<Int> int_array(const json& v, const char* what) {
  if (!v.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<Int> out;
  for (const json& x : v) out.push_back(as_int(x, what));
  return out;
}

// 1-based JSON vertex list to 0-based vertices, each in 1..n.
std::vector<Vertex> vertex_list(const json& v, int n, const char* what, ErrorCode code) {
  std::vector<Vertex> out;
  for (Int x : int_array(v, what)) {
    if (x < 1 || x > n) {
      throw Error(code, std::string(what) + " entry " + std::to_string(x) + " not in 1.." + std::to_string(n));
    }
    out.push_back(static_cast<Vertex>(x - 1));
  }
  return out;
}

json one_based(std::span<const Vertex> vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

std::string kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Finite: return "Finite";
    case VerdictKind::InfiniteWeightWitness: return "InfiniteWeightWitness";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

}  // namespace

json to_json(const ValuedQuiver& q) {
  json doc;
  doc["n"] = q.rank();
  doc["B"] = q.matrix();
  doc["d"] = std::vector<Int>(q.symmetrizer().begin(), q.symmetrizer().end());
  if (q.has_frozen()) doc["frozen"] = one_based(q.frozen_vertices());
  return doc;
}

ValuedQuiver quiver_from_json(const json& doc) {
  const json& b = field(doc, "B");
  if (!b.is_array()) malformed("B must be an array of rows");
  Matrix m;
  for (const json& row : b) m.push_back(int_array(row, "B entry"));
  if (doc.contains("n")) {
    const Int n = as_int(doc["n"], "n");
    if (n != static_cast<Int>(m.size())) {
      throw Error(ErrorCode::SizeMismatch, "n=" + std::to_string(n) + " but B has " + std::to_string(m.size()) + " rows");
    }
  }
  std::optional<std::vector<Int>> d;
  if (doc.contains("d") && !doc["d"].is_null()) {
    d = int_array(doc["d"], "d");
    if (d->size() != m.size()) throw Error(ErrorCode::SizeMismatch, "d has the wrong length");
  }
  ValuedQuiver q = make_quiver(m, d);
  if (doc.contains("frozen") && !doc["frozen"].is_null()) {
    const auto frozen = vertex_list(doc["frozen"], q.rank(), "frozen", ErrorCode::VertexOutOfRange);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < q.rank(); ++v) {
      if (std::find(frozen.begin(), frozen.end(), v) == frozen.end()) keep.push_back(v);
    }
    if (!frozen.empty()) q = restrict_to(q, keep);
  }
  return q;
}

json word_to_json(const MutationWord& w) { return one_based(w.letters()); }

json to_json(const Verdict& v) {
  json doc;
  doc["kind"] = kind_name(v.kind);
  doc["reason"] = v.reason;
  if (v.kind == VerdictKind::InfiniteWeightWitness) {
    doc["path"] = word_to_json(v.path);
    doc["weight"] = v.offending_weight;
  }
  return doc;
}

json to_json(const ExchangeGraph& g) {
  json doc;
  json nodes = json::array();
  for (const ValuedQuiver& q : g.nodes()) nodes.push_back(to_json(q));
  json arcs = json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.from, a.k + 1, a.to});
  doc["nodes"] = std::move(nodes);
  doc["arcs"] = std::move(arcs);
  doc["verdict"] = to_json(g.verdict());
  doc["limits"] = {{"max_nodes", g.limits().max_nodes}, {"max_weight", g.limits().max_weight}};
  return doc;
}

json to_json(const ClassReport& r) {
  return {{"size", r.size},
          {"class_weight", r.class_weight},
          {"fully_cyclic_class",
           {{"leaf_free", r.fully_cyclic_class.leaf_free},
            {"every_vertex_on_cycle", r.fully_cyclic_class.every_vertex_on_cycle}}},
          {"distinct_up_to_symmetry", r.distinct_up_to_symmetry},
          {"distinct_up_to_permutation", r.distinct_up_to_permutation}};
}

json to_json(const SymmetryWitness& w) { return {{"sigma", one_based(w.sigma.image())}, {"epsilon", w.epsilon}}; }

json to_json(const LoopCertificate& c) {
  json witnesses = json::array();
  for (const NodeWitness& nw : c.witnesses) {
    json entry = to_json(nw.witness);
    entry["node"] = nw.node;
    witnesses.push_back(std::move(entry));
  }
  return {{"word", word_to_json(c.word)},
          {"witnesses", std::move(witnesses)},
          {"homogeneous", c.homogeneous},
          {"full", c.full}};
}

LoopCertificate certificate_from_json(const json& doc) {
  LoopCertificate c;
  std::vector<Vertex> letters;
  for (Int x : int_array(field(doc, "word"), "word letter")) {
    if (x < 1 || x > INT32_MAX) throw Error(ErrorCode::LetterOutOfRange, "word letter " + std::to_string(x));
    letters.push_back(static_cast<Vertex>(x - 1));
  }
  c.word = MutationWord(std::move(letters));
  const json& ws = field(doc, "witnesses");
  if (!ws.is_array()) malformed("witnesses must be an array");
  for (const json& entry : ws) {
    const Int node = as_int(field(entry, "node"), "node");
    if (node < 0) malformed("node must be non-negative");
    std::vector<Vertex> image;
    for (Int x : int_array(field(entry, "sigma"), "sigma")) {
      if (x < 1 || x > INT32_MAX) {
        throw Error(ErrorCode::InvalidPermutation, "node " + std::to_string(node) + ": sigma entry " + std::to_string(x));
      }
      image.push_back(static_cast<Vertex>(x - 1));
    }
    NodeWitness nw;
    nw.node = static_cast<std::size_t>(node);
    try {
      nw.witness.sigma = Permutation(std::move(image));
    } catch (const Error& e) {
      throw Error(e.code(), "node " + std::to_string(node) + ": sigma is not a permutation");
    }
    const Int eps = as_int(field(entry, "epsilon"), "epsilon");
    if (eps < INT32_MIN || eps > INT32_MAX) malformed("epsilon out of range");
    nw.witness.epsilon = static_cast<int>(eps);
    c.witnesses.push_back(std::move(nw));
  }
  const json& h = field(doc, "homogeneous");
  const json& f = field(doc, "full");
  if (!h.is_boolean() || !f.is_boolean()) malformed("homogeneous and full must be booleans");
  c.homogeneous = h.get<bool>();
  c.full = f.get<bool>();
  return c;
}

json to_json(const LoopVerdict& v) { return {{"verdict", to_string(v.kind)}, {"rule", v.rule}, {"reason", v.reason}}; }

json to_json(const CrossValidation& c) {
  return {{"decision", to_json(c.verdict)},
          {"certificates", c.certificates},
          {"searched", c.searched},
          {"agree", c.agree},
          {"note", c.note}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string to_dot(const ValuedQuiver& q, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (Vertex v = 0; v < q.rank(); ++v) {
    std::string name = std::to_string(v + 1);
    if (static_cast<std::size_t>(v) < labels.size() && labels[static_cast<std::size_t>(v)] != name) {
      name += " " + labels[static_cast<std::size_t>(v)];
    }
    out << "  " << v + 1 << " [label=\"" << name << " (d=" << q.symmetrizer(v) << ")\"";
    if (q.is_frozen(v)) out << ", shape=box";
    out << "];\n";
  }
  for (const ValuedEdge& e : edges(q)) {
    out << "  " << e.source + 1 << " -> " << e.target + 1 << " [label=\"(" << e.out_value << "," << e.in_value
        << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const ExchangeGraph& g) {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (std::size_t i = 0; i < g.size(); ++i) out << "  " << i << ";\n";
  for (const Arc& a : g.arcs()) {
    if (a.from <= a.to) out << "  " << a.from << " -- " << a.to << " [label=\"" << a.k + 1 << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mutalab::io
