#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/isomorphism.hpp>

#include "barnette/canonical.hpp"
#include "barnette/catalog.hpp"
#include "barnette/graph.hpp"
#include "barnette/io.hpp"
#include "fixtures.hpp"

using namespace barnette;

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

BoostGraph to_boost(const BipartiteGraph& g) {
  BoostGraph b(g.vertex_count());
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, b);
  return b;
}

std::vector<BipartiteGraph> fixtures_list() {
  return {c4_graph(),        cube_graph(),        k33_graph(),      heawood_graph(),
          asano_graph(),     p5_example_graph(),  b_horton_graph(), cube_expanded_cube()};
}

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s(130);
  EXPECT_TRUE(s.none());
  s.set(0), s.set(64), s.set(129);
  EXPECT_EQ(s.count(), 3u);
  EXPECT_EQ(s.first(), 0u);
  EXPECT_EQ(s.next(1), 64u);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{0, 64, 129}));
  auto c = s.complement();
  EXPECT_EQ(c.count(), 127u);
  EXPECT_FALSE(c.intersects(s));
  EXPECT_TRUE((s | c).complement().none());
  VertexSet t(130);
  t.set(64);
  EXPECT_TRUE(t.is_subset_of(s));
  EXPECT_EQ((s - t).count(), 2u);
  t ^= s;
  EXPECT_EQ(t.to_vector(), (std::vector<int>{0, 129}));
}

TEST(BipartiteGraph, RejectsLoopsParallelEdgesAndBadColours) {
  EXPECT_THROW(BipartiteGraph(2, {{0, 0}}), GraphError);
  EXPECT_THROW(BipartiteGraph(2, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(BipartiteGraph(2, {{0, 2}}), GraphError);
  EXPECT_THROW(BipartiteGraph(2, {{0, 1}}, std::vector<Colour>{Colour::A, Colour::A}), GraphError);
  EXPECT_THROW(BipartiteGraph(-1), GraphError);
}

TEST(BipartiteGraph, StableEdgeIdsAndIncidence) {
  auto g = cube_graph();
  EXPECT_EQ(g.vertex_count(), 8);
  EXPECT_EQ(g.edge_count(), 12);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    EXPECT_EQ(g.edge_id(e.u, e.v), id);
    EXPECT_EQ(g.edge_id(e.v, e.u), id);
  }
  EXPECT_FALSE(g.edge_between(0, 7).has_value());
  EXPECT_THROW(g.edge_id(0, 7), GraphError);
}

TEST(Connectivity, KConnectivityOfFixtures) {
  EXPECT_TRUE(is_k_connected(cube_graph(), 3));
  EXPECT_FALSE(is_k_connected(cube_graph(), 4));
  EXPECT_TRUE(is_k_connected(heawood_graph(), 3));
  EXPECT_TRUE(is_k_connected(asano_graph(), 2));
  EXPECT_FALSE(is_k_connected(asano_graph(), 3));
  EXPECT_FALSE(is_k_connected(BipartiteGraph(4, {{0, 1}, {2, 3}}), 1));
  EXPECT_THROW(is_k_connected(c4_graph(), 4), GraphError);
}

TEST(Connectivity, TwoColouring) {
  EXPECT_TRUE(two_colour(cube_graph()).has_value());
  EXPECT_FALSE(two_colour(BipartiteGraph(3, {{0, 1}, {1, 2}, {2, 0}})).has_value());
  const auto h = heawood_graph();
  auto col = *two_colour(h);
  for (const auto& e : h.edges()) EXPECT_NE(col[e.u], col[e.v]);
}

TEST(Connectivity, ComponentsWithRemovedEdges) {
  auto g = p5_example_graph();
  auto e = catalog("p5_example");
  VertexSet removed = g.empty_edge_set();
  for (EdgeId id : e.marked_edges["dashed_cut"]) removed.set(id);
  std::vector<int> label;
  EXPECT_EQ(components(g, g.empty_vertex_set(), removed, label), 2);
}

TEST(Graph6, RoundTripOnFixtures) {
  for (const auto& g : fixtures_list()) {
    auto s = to_graph6(g);
    auto h = from_graph6(s);
    EXPECT_EQ(h.vertex_count(), g.vertex_count());
    EXPECT_EQ(to_graph6(h), s);
    for (const auto& e : g.edges()) EXPECT_TRUE(h.adjacent(e.u, e.v));
  }
}

TEST(Graph6, KnownEncodingsAndErrors) {
  // 0-1, 1-2, 2-3, 3-0: upper-triangle bits 101101.
  auto c4 = from_graph6("Cl");
  EXPECT_TRUE(c4.is_regular(2));
  EXPECT_EQ(c4.edge_count(), 4);
  EXPECT_EQ(from_graph6(">>graph6<<Cl\n").edge_count(), 4);
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("C"), ParseError);
  EXPECT_THROW(from_graph6("C\x01"), ParseError);
  auto big = horton_graph();
  EXPECT_EQ(from_graph6(to_graph6(big)).edge_count(), big.edge_count());
}

TEST(Bgf, ByteIdenticalRoundTrip) {
  for (const auto& g : fixtures_list()) {
    BgfRecord rec{g, {}, {}};
    if (auto emb = embed_planar(g)) rec.rotation = emb->rotation();
    rec.cuts.emplace_back(3, std::vector<EdgeId>{0, 1});
    const auto text = to_bgf(rec);
    auto back = read_bgf(text);
    ASSERT_EQ(back.size(), 1u);
    EXPECT_EQ(to_bgf(back[0]), text);
  }
}

TEST(Bgf, CommentsUncolouredAndErrors) {
  auto recs = read_bgf("# two graphs\n2 1\n??\n0 1\n\n4 4\nABAB\n0 1\n1 2\n2 3\n3 0\n");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_FALSE(recs[0].graph.has_colour());
  EXPECT_TRUE(recs[1].graph.has_colour());
  EXPECT_THROW(read_bgf("2 1\nAB\n"), ParseError);
  EXPECT_THROW(read_bgf("2 1\nA\n0 1\n"), ParseError);
  EXPECT_THROW(read_bgf("2 1\nAX\n0 1\n"), ParseError);
  EXPECT_THROW(read_bgf("x y\n"), ParseError);
}

TEST(ReadGraphs, DetectsFormat) {
  std::istringstream g6("Cl\nEFz_\n");
  EXPECT_EQ(read_graphs(g6).size(), 2u);
  std::istringstream bgf(to_bgf(cube_graph()));
  auto gs = read_graphs(bgf);
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0].edge_count(), 12);
}

// Oracle: Boost's isomorphism test.
TEST(Canonical, InvariantUnderRelabellingAndSeparatesClasses) {
  std::mt19937_64 rng(7);
  auto list = fixtures_list();
  for (const auto& g : list)
    for (int t = 0; t < 5; ++t) {
      auto h = fixtures::random_relabel(g, rng);
      ASSERT_TRUE(boost::isomorphism(to_boost(g), to_boost(h)));
      EXPECT_EQ(canonical_form(g), canonical_form(h));
    }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      bool iso = list[i].vertex_count() == list[j].vertex_count() &&
                 list[i].edge_count() == list[j].edge_count() &&
                 boost::isomorphism(to_boost(list[i]), to_boost(list[j]));
      EXPECT_EQ(iso, canonical_form(list[i]) == canonical_form(list[j]));
    }
}

TEST(Canonical, RandomGraphsAgreeWithBoostIsomorphism) {
  std::mt19937_64 rng(11);
  std::vector<BipartiteGraph> graphs;
  for (int t = 0; t < 60; ++t) {
    // Random bipartite graphs on 4+4 vertices with 8 edges.
    std::vector<Edge> es;
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < 4; ++a)
      for (int b = 4; b < 8; ++b) all.emplace_back(a, b);
    std::shuffle(all.begin(), all.end(), rng);
    for (int i = 0; i < 8; ++i) es.push_back({all[i].first, all[i].second});
    graphs.emplace_back(8, es);
  }
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      EXPECT_EQ(boost::isomorphism(to_boost(graphs[i]), to_boost(graphs[j])),
                canonical_form(graphs[i]) == canonical_form(graphs[j]));
}

TEST(Canonical, EmptyGraph) { EXPECT_EQ(canonical_form(BipartiteGraph(0)), "?"); }
