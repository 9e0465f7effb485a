#include "mutalab/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <regex>

namespace mutalab {

namespace {

// Edge s -> t with valuation (out, in), i.e. b[s][t] = out, b[t][s] = -in.
struct E {
  Vertex s;
  Vertex t;
  Int out;
  Int in;
};

ValuedQuiver from_edges(int n, const std::vector<E>& es) {
  Matrix b(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (const E& e : es) {
    b[static_cast<std::size_t>(e.s)][static_cast<std::size_t>(e.t)] = e.out;
    b[static_cast<std::size_t>(e.t)][static_cast<std::size_t>(e.s)] = -e.in;
  }
  return make_quiver(b);
}

[[noreturn]] void bad_params(const std::string& name, const std::string& why) {
  throw Error(ErrorCode::BadParams, name + ": " + why);
}

void expect_count(const std::string& name, const std::vector<int>& p, std::size_t lo, std::size_t hi) {
  if (p.size() < lo || p.size() > hi) {
    bad_params(name, "expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
                         " parameter(s), got " + std::to_string(p.size()));
  }
}

void expect_range(const std::string& name, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    bad_params(name, "parameter " + std::to_string(value) + " outside " + std::to_string(lo) + ".." +
                         (hi == INT32_MAX ? std::string("inf") : std::to_string(hi)));
  }
}

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Triangle v -> k, j -> v, k -> j in (v, j, k) order.
struct Triangle {
  std::pair<Int, Int> vk, jv, kj;
};

Triangle triangle_a_x(int x) { return {{x, 1}, {1, x}, {2, 2}}; }
Triangle triangle_a() { return {{1, 2}, {1, 2}, {4, 1}}; }

std::vector<E> triangle_edges(Vertex v, Vertex j, Vertex k, const Triangle& t) {
  return {{v, k, t.vk.first, t.vk.second}, {j, v, t.jv.first, t.jv.second}, {k, j, t.kj.first, t.kj.second}};
}

// Two copies of a triangle joined v' -> p1 -> ... -> v by a simply laced path
// with `l` edges. Order: v', j', k', p1..p(l-1), v, j, k.
CatalogEntry two_triangles(const Triangle& t, int l) {
  const int n = 5 + l;
  const Vertex v2 = n - 3;
  std::vector<E> es = triangle_edges(0, 1, 2, t);
  for (const E& e : triangle_edges(v2, v2 + 1, v2 + 2, t)) es.push_back(e);
  std::vector<Vertex> path{0};
  for (int p = 3; p < v2; ++p) path.push_back(p);
  path.push_back(v2);
  for (std::size_t a = 0; a + 1 < path.size(); ++a) es.push_back({path[a], path[a + 1], 1, 1});
  CatalogEntry e;
  e.labels = {"v'", "j'", "k'"};
  for (int p = 1; p < l; ++p) e.labels.push_back("p" + std::to_string(p));
  for (const char* s : {"v", "j", "k"}) e.labels.emplace_back(s);
  e.quiver = from_edges(n, es);
  return e;
}

// Top T, bottom B, branch vertices a, b, c with T -> a,b,c -> B and
// B -> T of valuation (2,2); simply laced arms hang off a, b, c.
CatalogEntry elliptic(int arm_a, int arm_b, int arm_c) {
  std::vector<E> es{{0, 2, 1, 1}, {0, 3, 1, 1}, {0, 4, 1, 1}, {2, 1, 1, 1}, {3, 1, 1, 1}, {4, 1, 1, 1}, {1, 0, 2, 2}};
  CatalogEntry e;
  e.labels = {"T", "B", "a", "b", "c"};
  int next = 5;
  const std::pair<Vertex, int> arms[] = {{2, arm_a}, {3, arm_b}, {4, arm_c}};
  for (const auto& [root, len] : arms) {
    Vertex prev = root;
    for (int s = 1; s <= len; ++s) {
      es.push_back({prev, next, 1, 1});
      e.labels.push_back(e.labels[static_cast<std::size_t>(root)] + std::to_string(s));
      prev = next++;
    }
  }
  e.quiver = from_edges(next, es);
  return e;
}

using Builder = std::function<CatalogEntry(const std::string&, const std::vector<int>&)>;

struct Registered {
  CatalogName info;
  Builder build;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> r = [] {
    std::vector<Registered> v;
    auto add = [&](std::string name, std::string params, std::string summary, Builder b) {
      v.push_back({{std::move(name), std::move(params), std::move(summary)}, std::move(b)});
    };

    add("Q_a_x", "x in 1..4", "3-cycle v->k (x,1), j->v (1,x), k->j (2,2); order v,j,k",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 1, 1);
          expect_range(n, p[0], 1, 4);
          CatalogEntry e;
          e.labels = {"v", "j", "k"};
          e.quiver = from_edges(3, triangle_edges(0, 1, 2, triangle_a_x(p[0])));
          return e;
        });
    add("Q_a", "", "3-cycle v->k (1,2), j->v (1,2), k->j (4,1); order v,j,k",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 0, 0);
          CatalogEntry e;
          e.labels = {"v", "j", "k"};
          e.quiver = from_edges(3, triangle_edges(0, 1, 2, triangle_a()));
          return e;
        });
    add("Q_c_t", "t in 1..2", "k->j (t,1), v->k (1,t), v->l (1,2), j->v (2,2), l->j (2,1); order k,v,j,l",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 1, 1);
          expect_range(n, p[0], 1, 2);
          const Int t = p[0];
          CatalogEntry e;
          e.labels = {"k", "v", "j", "l"};
          e.quiver = from_edges(4, {{0, 2, t, 1}, {1, 0, 1, t}, {1, 3, 1, 2}, {2, 1, 2, 2}, {3, 2, 2, 1}});
          return e;
        });
    add("Q_d", "", "v->j, i->v, j->i (2,2), i->l (1,3), l->j (3,1); order v,i,j,l",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 0, 0);
          CatalogEntry e;
          e.labels = {"v", "i", "j", "l"};
          e.quiver = from_edges(4, {{0, 2, 1, 1}, {1, 0, 1, 1}, {2, 1, 2, 2}, {1, 3, 1, 3}, {3, 2, 3, 1}});
          return e;
        });
    add("X6", "", "two (2,2) 3-cycles sharing c, plus a leaf m; order c,a,p,b,q,m",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 0, 0);
          CatalogEntry e;
          e.labels = {"c", "a", "p", "b", "q", "m"};
          e.quiver = from_edges(6, {{1, 0, 1, 1}, {0, 2, 1, 1}, {2, 1, 2, 2}, {3, 0, 1, 1}, {0, 4, 1, 1}, {4, 3, 2, 2},
                                    {0, 5, 1, 1}});
          return e;
        });
    add("X7", "", "three (2,2) 3-cycles sharing c; order c,x1,y1,x2,y2,x3,y3",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 0, 0);
          CatalogEntry e;
          e.labels = {"c", "x1", "y1", "x2", "y2", "x3", "y3"};
          std::vector<E> es;
          for (Vertex x = 1; x < 7; x += 2) {
            es.push_back({x, 0, 1, 1});
            es.push_back({0, x + 1, 1, 1});
            es.push_back({x + 1, x, 2, 2});
          }
          e.quiver = from_edges(7, es);
          return e;
        });
    add("Q_l_a1", "l >= 1 path edges", "two Q_a_x(1) cycles joined v'->...->v",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 1, 1);
          expect_range(n, p[0], 1, 64);
          return two_triangles(triangle_a_x(1), p[0]);
        });
    add("Q_l_a", "l >= 1 path edges", "two Q_a cycles joined v'->...->v",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 1, 1);
          expect_range(n, p[0], 1, 64);
          return two_triangles(triangle_a(), p[0]);
        });
    add("Q_l_a2", "l >= 1 path edges", "two Q_a_x(2) cycles joined v'->...->v",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 1, 1);
          expect_range(n, p[0], 1, 64);
          return two_triangles(triangle_a_x(2), p[0]);
        });
    add("E6_11", "", "elliptic E6(1,1), rank 8", [](const std::string& n, const std::vector<int>& p) {
      expect_count(n, p, 0, 0);
      return elliptic(1, 1, 1);
    });
    add("E7_11", "", "elliptic E7(1,1), rank 9", [](const std::string& n, const std::vector<int>& p) {
      expect_count(n, p, 0, 0);
      return elliptic(2, 0, 2);
    });
    add("E8_11", "", "elliptic E8(1,1), rank 10", [](const std::string& n, const std::vector<int>& p) {
      expect_count(n, p, 0, 0);
      return elliptic(1, 0, 4);
    });
    add("Markov4", "", "3-cycle with every valuation (2,2)", [](const std::string& n, const std::vector<int>& p) {
      expect_count(n, p, 0, 0);
      CatalogEntry e;
      e.labels = {"i", "j", "k"};
      e.quiver = from_edges(3, {{0, 2, 2, 2}, {2, 1, 2, 2}, {1, 0, 2, 2}});
      return e;
    });
    add("Table12_row", "r in 1..4", "rank 3 weight 4 classes; order i,j,k",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 1, 1);
          expect_range(n, p[0], 1, 4);
          constexpr Vertex i = 0, j = 1, k = 2;
          CatalogEntry e;
          e.labels = {"i", "j", "k"};
          switch (p[0]) {
            case 1: e.quiver = from_edges(3, {{i, k, 2, 2}, {k, j, 2, 2}, {j, i, 2, 2}}); break;
            case 2: e.quiver = from_edges(3, {{k, j, 1, 4}, {i, k, 2, 1}, {j, i, 2, 1}}); break;
            case 3: e.quiver = from_edges(3, {{k, i, 2, 1}, {j, k, 2, 2}, {i, j, 1, 2}}); break;
            default: e.quiver = from_edges(3, {{k, j, 2, 2}, {i, k, 4, 1}, {j, i, 1, 4}}); break;
          }
          return e;
        });
    add("Table11_row", "r in 1..3, m in 1..2, side in 1..2 (default 1)",
        "rank 3 counterexample paths; the weight-m edge has valuation (m,1) for side 1, (1,m) for side 2; order i,j,k",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 2, 3);
          expect_range(n, p[0], 1, 3);
          expect_range(n, p[1], 1, 2);
          const int side = p.size() > 2 ? p[2] : 1;
          expect_range(n, side, 1, 2);
          const Int m = p[1];
          const Int a = side == 1 ? m : 1, b = side == 1 ? 1 : m;
          constexpr Vertex i = 0, j = 1, k = 2;
          CatalogEntry e;
          e.labels = {"i", "j", "k"};
          switch (p[0]) {
            case 1: e.quiver = from_edges(3, {{k, i, 1, 1}, {k, j, a, b}}); break;
            case 2: e.quiver = from_edges(3, {{i, k, 1, 1}, {k, j, a, b}}); break;
            default: e.quiver = from_edges(3, {{k, i, a, b}, {k, j, 1, 1}}); break;
          }
          return e;
        });
    add("Lemma33_exceptional", "", "3-cycle k->i (1,3), j->k (2,2), i->j (3,1); order i,j,k",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 0, 0);
          CatalogEntry e;
          e.labels = {"i", "j", "k"};
          e.quiver = from_edges(3, {{2, 0, 1, 3}, {1, 2, 2, 2}, {0, 1, 3, 1}});
          return e;
        });
    add("Table14_row", "r in 1..3", "rank 4-5 fully cyclic weight 4 classes",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 1, 1);
          expect_range(n, p[0], 1, 3);
          if (p[0] == 1) return build_entry("Example_3_2_4", {1});
          if (p[0] == 2) return build_entry("Example_3_2_3");
          CatalogEntry e;
          e.labels = {"k", "v", "j", "i"};
          e.quiver = from_edges(4, {{0, 2, 1, 1}, {1, 0, 1, 1}, {1, 3, 3, 1}, {2, 1, 2, 2}, {3, 2, 1, 3}});
          return e;
        });
    add("Example_2_8_1", "", "7-vertex quiver with vertices 4..7 frozen",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 0, 0);
          CatalogEntry e;
          e.labels = numbered(7);
          const ValuedQuiver full = from_edges(
              7, {{2, 3, 2, 3}, {2, 1, 2, 3}, {1, 0, 1, 2}, {6, 1, 2, 1}, {5, 0, 1, 1}, {0, 2, 6, 2}, {0, 4, 2, 3}});
          const std::vector<Vertex> keep{0, 1, 2};
          e.quiver = restrict_to(full, keep);
          return e;
        });
    add("Example_2_8_1_sub", "", "the 3-vertex subquiver on {1,2,3}, d=(1,2,3)",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 0, 0);
          CatalogEntry e;
          e.labels = numbered(3);
          e.quiver = from_edges(3, {{1, 0, 1, 2}, {2, 1, 2, 3}, {0, 2, 6, 2}});
          return e;
        });
    add("Example_3_2_3", "", "v->k (1,2), k->j (2,1), j->v (2,2), v->i (2,1), i->j (1,2); order k,v,j,i",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 0, 0);
          CatalogEntry e;
          e.labels = {"k", "v", "j", "i"};
          e.quiver = from_edges(4, {{1, 0, 1, 2}, {0, 2, 2, 1}, {2, 1, 2, 2}, {1, 3, 2, 1}, {3, 2, 1, 2}});
          return e;
        });
    add("Example_3_2_4", "variant in 1..2 (default 1)",
        "pentagon with chords; variant 1 has d_t=1, variant 2 has d_t=2; order i,l,t,j,k",
        [](const std::string& n, const std::vector<int>& p) {
          expect_count(n, p, 0, 1);
          const int variant = p.empty() ? 1 : p[0];
          expect_range(n, variant, 1, 2);
          constexpr Vertex i = 0, l = 1, t = 2, j = 3, k = 4;
          // Weight-2 edges into t and out of t.
          const std::pair<Int, Int> in_t = variant == 1 ? std::pair<Int, Int>{1, 2} : std::pair<Int, Int>{2, 1};
          const std::pair<Int, Int> out_t{in_t.second, in_t.first};
          CatalogEntry e;
          e.labels = {"i", "l", "t", "j", "k"};
          e.quiver = from_edges(5, {{l, i, 2, 2},
                                    {i, t, in_t.first, in_t.second},
                                    {t, l, out_t.first, out_t.second},
                                    {t, k, out_t.first, out_t.second},
                                    {k, j, 2, 2},
                                    {j, t, in_t.first, in_t.second}});
          return e;
        });
    add("A_n", "n >= 1", "linear 1->2->...->n", [](const std::string& name, const std::vector<int>& p) {
      expect_count(name, p, 1, 1);
      expect_range(name, p[0], 1, 64);
      std::vector<E> es;
      for (Vertex a = 0; a + 1 < p[0]; ++a) es.push_back({a, a + 1, 1, 1});
      CatalogEntry e;
      e.labels = numbered(p[0]);
      e.quiver = from_edges(p[0], es);
      return e;
    });
    add("path_B", "n >= 2", "1->2 of valuation (2,1), then simply laced 2->...->n",
        [](const std::string& name, const std::vector<int>& p) {
          expect_count(name, p, 1, 1);
          expect_range(name, p[0], 2, 64);
          std::vector<E> es{{0, 1, 2, 1}};
          for (Vertex a = 1; a + 1 < p[0]; ++a) es.push_back({a, a + 1, 1, 1});
          CatalogEntry e;
          e.labels = numbered(p[0]);
          e.quiver = from_edges(p[0], es);
          return e;
        });
    add("D_n", "n >= 4", "1->2->...->n-2, n-2->n-1, n-2->n; D_n(4) is a star",
        [](const std::string& name, const std::vector<int>& p) {
          expect_count(name, p, 1, 1);
          expect_range(name, p[0], 4, 64);
          const int n = p[0];
          std::vector<E> es;
          for (Vertex a = 0; a + 1 < n - 2; ++a) es.push_back({a, a + 1, 1, 1});
          es.push_back({n - 3, n - 2, 1, 1});
          es.push_back({n - 3, n - 1, 1, 1});
          CatalogEntry e;
          e.labels = numbered(n);
          e.quiver = from_edges(n, es);
          return e;
        });
    add("Rank2", "a >= 1, b >= 1", "single edge 1->2 of valuation (a,b)",
        [](const std::string& name, const std::vector<int>& p) {
          expect_count(name, p, 2, 2);
          expect_range(name, p[0], 1, INT32_MAX);
          expect_range(name, p[1], 1, INT32_MAX);
          CatalogEntry e;
          e.labels = {"i", "j"};
          e.quiver = from_edges(2, {{0, 1, p[0], p[1]}});
          return e;
        });
    return v;
  }();
  return r;
}

}  // namespace

std::string CatalogEntry::spec() const {
  std::string out = name;
  if (!params.empty()) {
    out += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(params[i]);
    }
    out += ')';
  }
  return out;
}

const std::vector<CatalogName>& catalog_names() {
  static const std::vector<CatalogName> names = [] {
    std::vector<CatalogName> out;
    for (const Registered& r : registry()) out.push_back(r.info);
    return out;
  }();
  return names;
}

CatalogEntry build_entry(const std::string& name, const std::vector<int>& params) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const Registered& r) { return r.info.name == name; });
  if (it == reg.end()) throw Error(ErrorCode::UnknownName, "no catalog entry named '" + name + "'");
  CatalogEntry e = it->build(name, params);
  e.name = name;
  e.params = params;
  return e;
}

CatalogEntry build_spec(const std::string& spec) {
  static const std::regex form(R"(^\s*([A-Za-z0-9_]+)\s*(?:\(([^)]*)\))?\s*$)");
  std::smatch m;
  if (!std::regex_match(spec, m, form)) throw Error(ErrorCode::BadParams, "cannot parse catalog spec '" + spec + "'");
  std::vector<int> params;
  const std::string args = m[2].str();
  std::size_t pos = 0;
  while (pos < args.size() && args.find_first_not_of(" ", pos) != std::string::npos) {
    std::size_t comma = args.find(',', pos);
    if (comma == std::string::npos) comma = args.size();
    std::string tok = args.substr(pos, comma - pos);
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    int value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size()) {
      throw Error(ErrorCode::BadParams, "bad parameter '" + tok + "' in '" + spec + "'");
    }
    params.push_back(value);
    pos = comma + 1;
  }
  return build_entry(m[1].str(), params);
}

const std::vector<CatalogEntry>& catalog_instances() {
  static const std::vector<CatalogEntry> all = [] {
    std::vector<CatalogEntry> out;
    auto add = [&](const std::string& name, std::vector<int> p = {}) { out.push_back(build_entry(name, p)); };
    for (int x = 1; x <= 4; ++x) add("Q_a_x", {x});
    add("Q_a");
    add("Q_c_t", {1});
    add("Q_c_t", {2});
    add("Q_d");
    add("X6");
    add("X7");
    for (int l = 1; l <= 3; ++l) {
      add("Q_l_a1", {l});
      add("Q_l_a", {l});
      add("Q_l_a2", {l});
    }
    add("E6_11");
    add("E7_11");
    add("E8_11");
    add("Markov4");
    for (int r = 1; r <= 4; ++r) add("Table12_row", {r});
    add("Lemma33_exceptional");
    for (int r = 1; r <= 3; ++r) add("Table14_row", {r});
    add("Example_2_8_1_sub");
    add("Example_3_2_3");
    add("Example_3_2_4", {1});
    add("Example_3_2_4", {2});
    for (int n = 1; n <= 8; ++n) add("A_n", {n});
    for (int n = 2; n <= 8; ++n) add("path_B", {n});
    for (int n = 4; n <= 8; ++n) add("D_n", {n});
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4; ++b) add("Rank2", {a, b});
    }
    return out;
  }();
  return all;
}

std::vector<std::pair<std::string, SymmetryWitness>> match_catalog(const ValuedQuiver& q) {
  std::vector<std::pair<std::string, SymmetryWitness>> out;
  for (const CatalogEntry& e : catalog_instances()) {
    if (e.quiver.rank() != q.rank()) continue;
    if (auto w = symmetry_witness(e.quiver, q, SignPolicy::PositiveOnly)) out.emplace_back(e.spec(), std::move(*w));
  }
  return out;
}

}  // namespace mutalab
