#include <gtest/gtest.h>

#include <deque>
#include <set>

#include "mutalab/catalog.hpp"
#include "mutalab/error.hpp"
#include "mutalab/exchange_graph.hpp"
#include "oracles.hpp"

using namespace mutalab;

namespace {

// Plain BFS over exact matrices; the size of the orbit of the seed.
std::size_t naive_class_size(const ValuedQuiver& q, std::size_t cap, std::vector<int> directions = {}) {
  if (directions.empty()) {
    for (int k = 0; k < q.rank(); ++k) directions.push_back(k);
  }
  std::set<oracle::M> seen{oracle::matrix_of(q)};
  std::deque<oracle::M> todo{oracle::matrix_of(q)};
  while (!todo.empty() && seen.size() <= cap) {
    const oracle::M b = todo.front();
    todo.pop_front();
    for (int k : directions) {
      auto m = oracle::mutate(b, k);
      if (seen.insert(m).second) todo.push_back(std::move(m));
    }
  }
  return seen.size();
}

void audit_closed(const ExchangeGraph& g) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (Vertex k : g.node(u).mutable_vertices()) {
      const auto v = g.successor(u, k);
      ASSERT_NE(v, ExchangeGraph::kNoArc);
      EXPECT_EQ(g.node(static_cast<std::size_t>(v)), mutate(g.node(u), k));
      EXPECT_EQ(g.successor(static_cast<std::size_t>(v), k), static_cast<std::ptrdiff_t>(u));
    }
    EXPECT_EQ(apply(g.seed(), g.path_to(u)), g.node(u));
  }
}

}  // namespace

TEST(Enumerate, SizesMatchNaiveBfs) {
  for (const char* spec : {"A_n(3)", "A_n(4)", "D_n(4)", "path_B(4)", "Markov4", "Table12_row(2)",
                           "Table12_row(3)", "Lemma33_exceptional", "Q_d", "Q_c_t(1)", "Example_3_2_3",
                           "Table14_row(1)", "Rank2(1,4)"}) {
    const ValuedQuiver q = build_spec(spec).quiver;
    const ExchangeGraph g = enumerate_class(q);
    ASSERT_TRUE(g.verdict().finite()) << spec;
    EXPECT_EQ(g.size(), naive_class_size(q, 100000)) << spec;
    audit_closed(g);
  }
}

TEST(Enumerate, KnownLabelledSizes) {
  EXPECT_EQ(enumerate_class(build("A_n", {3})).size(), 14U);
  EXPECT_EQ(enumerate_class(build("Markov4")).size(), 2U);
  EXPECT_EQ(enumerate_class(build("A_n", {1})).size(), 1U);
}

TEST(Enumerate, TripledMarkovStopsAtSeed) {
  const ValuedQuiver q = make_quiver({{0, 3, -3}, {-3, 0, 3}, {3, -3, 0}});
  const ExchangeGraph g = enumerate_class(q);
  EXPECT_EQ(g.verdict().kind, VerdictKind::InfiniteWeightWitness);
  EXPECT_TRUE(g.verdict().path.empty());
  EXPECT_EQ(g.verdict().offending_weight, 9);
  EXPECT_EQ(g.size(), 1U);
}

TEST(Enumerate, InfiniteWitnessPathReplays) {
  // Weight 4 at rank 3 but not in a finite class: (2,2) edges on a path.
  const ValuedQuiver q = make_quiver({{0, 2, 0}, {-2, 0, 2}, {0, -2, 0}});
  const ExchangeGraph g = enumerate_class(q);
  ASSERT_EQ(g.verdict().kind, VerdictKind::InfiniteWeightWitness);
  const ValuedQuiver bad = apply(q, g.verdict().path);
  EXPECT_GT(mutable_weight(bad), g.limits().max_weight);
  EXPECT_EQ(mutable_weight(bad), g.verdict().offending_weight);
}

TEST(Enumerate, BudgetGivesInconclusive) {
  const ExchangeGraph g = enumerate_class(build("A_n", {4}), ClassLimits{10, 4});
  EXPECT_EQ(g.verdict().kind, VerdictKind::Inconclusive);
  EXPECT_EQ(g.size(), 10U);
  EXPECT_NE(g.verdict().reason.find("10"), std::string::npos);
}

TEST(Enumerate, InvalidLimits) {
  EXPECT_THROW(enumerate_class(build("A_n", {3}), ClassLimits{0, 4}), Error);
  EXPECT_THROW(enumerate_class(build("A_n", {3}), ClassLimits{10, 0}), Error);
}

TEST(Enumerate, ThreadCountDoesNotChangeResult) {
  for (const char* spec : {"A_n(5)", "X6", "Q_l_a1(1)"}) {
    const ValuedQuiver q = build_spec(spec).quiver;
    const ExchangeGraph a = enumerate_class(q, {}, 1);
    const ExchangeGraph b = enumerate_class(q, {}, 4);
    ASSERT_EQ(a.size(), b.size()) << spec;
    EXPECT_EQ(a.nodes(), b.nodes()) << spec;
    EXPECT_EQ(a.arcs(), b.arcs()) << spec;
  }
}

TEST(Enumerate, RankTwoIsAlwaysFinite) {
  // Weight far above max_weight is fine below rank 3.
  const ExchangeGraph g = enumerate_class(build("Rank2", {5, 7}));
  EXPECT_TRUE(g.verdict().finite());
  EXPECT_EQ(g.size(), 2U);
}

TEST(Enumerate, FrozenVerticesAreNotMutated) {
  const ValuedQuiver full = build("Example_2_8_1");
  const ExchangeGraph g = enumerate_class(full);
  // Mutable part has weight 12 at rank 3.
  EXPECT_EQ(g.verdict().kind, VerdictKind::InfiniteWeightWitness);
  const ValuedQuiver a3 = build("A_n", {4});
  const std::vector<Vertex> keep{0, 1, 2};
  const ExchangeGraph r = enumerate_class(restrict_to(a3, keep));
  ASSERT_TRUE(r.verdict().finite());
  for (std::size_t u = 0; u < r.size(); ++u) EXPECT_EQ(r.successor(u, 3), ExchangeGraph::kNoArc);
  // Frozen edges change too, so the class is larger than A3's 14.
  EXPECT_EQ(r.size(), naive_class_size(a3, 100000, {0, 1, 2}));
  EXPECT_GT(r.size(), 14U);
}

TEST(Report, CountsAndFlags) {
  const ClassReport r = class_report(enumerate_class(build("Example_3_2_3")));
  EXPECT_EQ(r.size, 6U);
  EXPECT_EQ(r.distinct_up_to_permutation, 4U);
  EXPECT_EQ(r.class_weight, 4);
  EXPECT_TRUE(r.fully_cyclic_class.leaf_free);
  EXPECT_LE(r.distinct_up_to_symmetry, r.distinct_up_to_permutation);

  // Independent count with the brute-force oracle.
  const ExchangeGraph g = enumerate_class(build("Table12_row", {3}));
  std::vector<std::size_t> reps;
  for (std::size_t u = 0; u < g.size(); ++u) {
    bool found = false;
    for (std::size_t v : reps) found = found || oracle::brute_witness(g.node(v), g.node(u), true).has_value();
    if (!found) reps.push_back(u);
  }
  EXPECT_EQ(class_report(g).distinct_up_to_permutation, reps.size());
  EXPECT_EQ(count_up_to_symmetry(g.nodes(), SignPolicy::PositiveOnly), reps.size());

  const ExchangeGraph inf = enumerate_class(make_quiver({{0, 3, -3}, {-3, 0, 3}, {3, -3, 0}}));
  try {
    class_report(inf);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ClassNotFinite);
  }
}

TEST(Graph, IndexOfAndArcs) {
  const ExchangeGraph g = enumerate_class(build("A_n", {3}));
  for (std::size_t u = 0; u < g.size(); ++u) EXPECT_EQ(g.index_of(g.node(u)), u);
  EXPECT_FALSE(g.index_of(build("Markov4")));
  EXPECT_EQ(g.arcs().size(), g.size() * 3);
  EXPECT_TRUE(g.path_to(0).empty());
}
