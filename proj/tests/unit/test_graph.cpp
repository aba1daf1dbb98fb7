#include "graphdss/catalog.hpp"
#include "graphdss/error.hpp"
#include "graphdss/graph.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace graphdss;

namespace {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph two_triangles() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.push_back({a, b});
    }
  }
  return Graph(n, edges);
}

EdgeSubset random_subset(std::size_t m, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.4);
  EdgeSubset s(m);
  for (EdgeId e = 0; e < m; ++e) {
    if (coin(rng)) s.set(e);
  }
  return s;
}

}  // namespace

TEST(GraphConstruction, RejectsSelfLoop) {
  try {
    Graph(3, {{0, 1}, {2, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidGraph);
  }
}

TEST(GraphConstruction, RejectsDuplicateEdgeInEitherDirection) {
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {0, 1}}), Error);
}

TEST(GraphConstruction, RejectsOutOfRangeEndpoint) {
  EXPECT_THROW(Graph(2, {{0, 2}}), Error);
}

TEST(GraphConstruction, RejectsLabelSizeMismatch) {
  EXPECT_THROW(Graph(2, {{0, 1}}, {"a"}), Error);
  EXPECT_THROW(Graph(2, {{0, 1}}, {}, {"x", "y"}), Error);
}

TEST(GraphConstruction, EdgeIndicesArePositional) {
  const Graph g(4, {{2, 3}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.edge(0), (Edge{2, 3}));
  EXPECT_EQ(g.edge(1), (Edge{0, 1}));
  EXPECT_EQ(*g.find_edge(2, 1), 2u);
  EXPECT_FALSE(g.find_edge(0, 3));
  EXPECT_EQ(g.other_end(2, 1), 2u);
  const auto inc = g.incident(2);
  EXPECT_EQ(std::vector<EdgeId>(inc.begin(), inc.end()), (std::vector<EdgeId>{0, 2}));
}

TEST(DegreeSequence, Examples) {
  EXPECT_EQ(degree_sequence(complete_graph(5)), (std::vector<std::size_t>(5, 4)));
  EXPECT_EQ(degree_sequence(petersen_graph()), (std::vector<std::size_t>(10, 3)));
  EXPECT_EQ(degree_sequence(Graph(2, {{0, 1}})), (std::vector<std::size_t>{1, 1}));
}

TEST(DegreeSequence, SumsToTwiceEdgeCount) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(9, 0.4, seed);
    const auto d = degree_sequence(g);
    EXPECT_EQ(std::accumulate(d.begin(), d.end(), std::size_t{0}), 2 * g.edge_count());
  }
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(petersen_graph()), 5u);
  EXPECT_EQ(girth(complete_bipartite_interleaved(4)), 4u);
  EXPECT_EQ(girth(complete_graph(5)), 3u);
  EXPECT_FALSE(girth(path_graph(6)).has_value());
  EXPECT_FALSE(girth(Graph(0, {})).has_value());
  EXPECT_EQ(girth(cycle_graph(7)), 7u);
}

TEST(Girth, MatchesSubsetEnumerationOnSmallGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_graph(7, 0.45, seed);
    if (g.edge_count() > 14) continue;
    const auto cycles = oracle::all_cycles_by_subsets(g);
    const auto got = girth(g);
    if (cycles.empty()) {
      EXPECT_FALSE(got.has_value()) << "seed " << seed;
      continue;
    }
    std::size_t best = SIZE_MAX;
    for (const auto& c : cycles) best = std::min(best, c.size());
    ASSERT_TRUE(got.has_value()) << "seed " << seed;
    EXPECT_EQ(*got, best) << "seed " << seed;
  }
}

TEST(ShortestCycle, IsAGirthLengthCycle) {
  for (const Graph& g : {petersen_graph(), complete_graph(5), robertson_graph(),
                         pg23_incidence_graph()}) {
    const auto c = shortest_cycle(g);
    EXPECT_EQ(c.size(), *girth(g));
    EXPECT_TRUE(oracle::is_simple_cycle(g, c));
    const auto vs = shortest_cycle_vertices(g);
    ASSERT_EQ(vs.size(), c.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      EXPECT_TRUE(g.find_edge(vs[i], vs[(i + 1) % vs.size()]));
    }
  }
  EXPECT_TRUE(shortest_cycle(path_graph(4)).empty());
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(petersen_graph()));
  EXPECT_FALSE(is_connected(two_triangles()));
  EXPECT_TRUE(is_connected(complete_graph(5)));
  EXPECT_TRUE(is_connected(Graph(0, {})));
  EXPECT_FALSE(is_connected(Graph(2, {})));
}

TEST(TwoCore, FiveCycleOfPetersenIsItsOwnCore) {
  const Graph g = petersen_graph();
  const auto c = shortest_cycle(g);
  const EdgeSubset s(g.edge_count(), c);
  EXPECT_EQ(two_core(g, s), s);
}

TEST(TwoCore, AnyFourPetersenEdgesPeelAway) {
  const Graph g = petersen_graph();
  const std::size_t m = g.edge_count();
  std::size_t checked = 0;
  for (EdgeId a = 0; a < m; ++a)
    for (EdgeId b = a + 1; b < m; ++b)
      for (EdgeId c = b + 1; c < m; ++c)
        for (EdgeId d = c + 1; d < m; ++d) {
          EXPECT_TRUE(two_core(g, EdgeSubset(m, {a, b, c, d})).empty());
          ++checked;
        }
  EXPECT_EQ(checked, 1365u);
}

TEST(TwoCore, PendantEdgeIsStripped) {
  const Graph g = petersen_graph();
  const auto c = shortest_cycle(g);
  EdgeSubset s(g.edge_count(), c);
  const EdgeSubset cycle_only = s;
  // An edge sharing exactly one vertex with the cycle.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (s.test(e)) continue;
    s.set(e);
    break;
  }
  EXPECT_EQ(two_core(g, s), cycle_only);
}

TEST(TwoCore, Properties) {
  std::mt19937_64 rng(7);
  for (const Graph& g : {petersen_graph(), robertson_graph(), complete_graph(6)}) {
    for (int t = 0; t < 200; ++t) {
      const EdgeSubset s = random_subset(g.edge_count(), rng);
      const EdgeSubset core = two_core(g, s);
      EXPECT_TRUE(core.is_subset_of(s));
      EXPECT_EQ(two_core(g, core), core);
      std::vector<char> mask(g.edge_count(), 0);
      for (EdgeId e : s.members()) mask[e] = 1;
      EXPECT_EQ(!core.empty(), oracle::has_cycle(g, mask));
      const auto members = s.members();
      const auto expect = oracle::strip_leaves(g, {members.begin(), members.end()});
      const auto got = core.members();
      EXPECT_EQ(std::set<EdgeId>(got.begin(), got.end()), expect);
    }
  }
}

TEST(Isomorphism, PetersenRelabeled) {
  const Graph p = petersen_graph();
  std::vector<VertexId> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(3);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : p.edges()) edges.push_back({perm[e.v], perm[e.u]});
  std::shuffle(edges.begin(), edges.end(), rng);
  EXPECT_TRUE(are_isomorphic(p, Graph(10, edges)));
  EXPECT_FALSE(are_isomorphic(p, complete_bipartite_interleaved(5)));
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), two_triangles()));
}

TEST(EdgeSubsetType, BasicOperations) {
  EdgeSubset a(10, {1, 3, 5});
  EdgeSubset b(10, {3, 4});
  EXPECT_EQ(a.count(), 3u);
  EXPECT_FALSE(a.empty());
  EXPECT_TRUE(EdgeSubset(10, {3}).is_subset_of(a));
  a |= b;
  EXPECT_EQ(a.members(), (std::vector<EdgeId>{1, 3, 4, 5}));
  a &= b;
  EXPECT_EQ(a.members(), (std::vector<EdgeId>{3, 4}));
  EXPECT_EQ(EdgeSubset::full(4).count(), 4u);
}
