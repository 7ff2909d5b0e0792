#include <gtest/gtest.h>

#include "barnette/catalog.hpp"
#include "barnette/constructions.hpp"
#include "fixtures.hpp"

using namespace barnette;

namespace {

std::vector<std::pair<Vertex, Vertex>> ascending_pairing(const BipartiteGraph& g1, Vertex u, const BipartiteGraph& g2,
                                                         Vertex v) {
  auto a = g1.neighbours(u).to_vector(), b = g2.neighbours(v).to_vector();
  std::vector<std::pair<Vertex, Vertex>> p;
  for (std::size_t i = 0; i < a.size(); ++i) p.emplace_back(a[i], b[i]);
  return p;
}

// A 4-cycle a, b, c, d of g (consecutive vertices adjacent).
std::array<Vertex, 4> some_c4(const BipartiteGraph& g) {
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex c = a + 1; c < g.vertex_count(); ++c) {
      auto common = (g.neighbours(a) & g.neighbours(c)).to_vector();
      if (common.size() >= 2) return {a, common[0], c, common[1]};
    }
  throw GraphError("no 4-cycle");
}

}  // namespace

TEST(Splice, CubeWithCubeGivesTightCut) {
  auto g = cube_graph();
  auto r = splice(g, 0, g, 7, ascending_pairing(g, 0, g, 7));
  EXPECT_EQ(r.graph.vertex_count(), 14);
  EXPECT_TRUE(r.graph.is_cubic());
  EXPECT_TRUE(two_colour(r.graph).has_value());
  EXPECT_EQ(r.cut.edge_ids.size(), 3u);
  EXPECT_TRUE(fixtures::brute_force_tight(r.graph, r.cut.edge_ids));
  EXPECT_EQ(canonical_form(r.graph), canonical_form(cube_expanded_cube()));
  EXPECT_EQ(r.from_g1[0], -1);
  EXPECT_EQ(r.from_g2[7], -1);
}

TEST(Splice, RejectsBadPairing) {
  auto g = cube_graph();
  EXPECT_THROW(splice(g, 0, g, 7, {{1, 3}, {2, 5}}), GraphError);
  EXPECT_THROW(splice(g, 0, g, 7, {{1, 3}, {1, 5}, {4, 6}}), GraphError);
}

TEST(Trisum, CubicTrisumOfCubesIsCubicBipartite) {
  auto g = cube_graph();
  auto c = some_c4(g);
  auto t = cubic_trisum({g, g, g}, {c, c, c});
  EXPECT_EQ(t.vertex_count(), 4 + 3 * 4);
  EXPECT_TRUE(t.is_cubic());
  EXPECT_TRUE(two_colour(t).has_value());
  EXPECT_TRUE(is_brace(coloured(t)));
  // Trisums of Pfaffian braces are Pfaffian.
  EXPECT_TRUE(find_pfaffian_orientation(t).orientation.has_value());
}

TEST(Trisum, P4HamiltonianSummandsGiveHamiltonianTrisum) {
  auto h = k33_graph();
  ASSERT_TRUE(is_pk_hamiltonian(h, 4).holds);
  auto c = some_c4(h);
  auto t = cubic_trisum({h, h, h}, {c, c, c});
  EXPECT_TRUE(t.is_cubic());
  EXPECT_TRUE(is_hamiltonian(t));
  EXPECT_TRUE(is_pk_hamiltonian(t, 4).holds);
}

TEST(Trisum, RejectsNonCycle) {
  auto g = cube_graph();
  EXPECT_THROW(trisum({g, g, g}, {std::array<Vertex, 4>{0, 1, 2, 4}, some_c4(g), some_c4(g)}, {}), GraphError);
}

// The cube is planar, hence Pfaffian, so none of its 4-cycles has a cross.
TEST(ConformalCross, NoneInCube) {
  auto g = cube_graph();
  for (Vertex a = 0; a < 8; ++a) {
    auto nb = g.neighbours(a).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        auto far = ((g.neighbours(nb[i]) & g.neighbours(nb[j])) - [&] {
                     VertexSet s = g.empty_vertex_set();
                     s.set(a);
                     return s;
                   }()).to_vector();
        for (Vertex c : far) EXPECT_FALSE(conformal_cross(g, {a, nb[i], c, nb[j]}).has_value());
      }
  }
}

TEST(ConformalCross, K33HasCross) {
  auto g = k33_graph();
  auto c = some_c4(g);
  auto x = conformal_cross(g, c);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->left.front(), c[0]);
  EXPECT_EQ(x->left.back(), c[2]);
  EXPECT_EQ(x->right.front(), c[1]);
  EXPECT_EQ(x->right.back(), c[3]);
  VertexSet used = g.empty_vertex_set();
  for (Vertex w : c) used.set(w);
  for (Vertex w : x->left) used.set(w);
  for (Vertex w : x->right) used.set(w);
  EXPECT_TRUE(is_conformal_vertex_set(g, used));
}

TEST(K33, WitnessesVerifyAndPlanarGraphsHaveNone) {
  for (const auto& g : {k33_graph(), b_horton_graph()}) {
    auto h = find_conformal_k33_bisubdivision(g);
    ASSERT_TRUE(h.has_value());
    EXPECT_TRUE(is_conformal_k33_bisubdivision(g, *h));
  }
  for (const auto& g : {cube_graph(), heawood_graph(), p5_example_graph(), c4_graph()})
    EXPECT_FALSE(find_conformal_k33_bisubdivision(g).has_value());
}

TEST(K33, CorruptWitnessRejected) {
  auto g = k33_graph();
  auto h = *find_conformal_k33_bisubdivision(g);
  auto bad = h;
  std::swap(bad.paths[0], bad.paths[1]);
  EXPECT_FALSE(is_conformal_k33_bisubdivision(g, bad));
  bad = h;
  bad.paths.pop_back();
  EXPECT_FALSE(is_conformal_k33_bisubdivision(g, bad));
}

// Oracle: |det| of the signed biadjacency matrix equals the number of perfect matchings.
TEST(Pfaffian, OrientationsPassDeterminantCheck) {
  for (const auto& g : {c4_graph(), cube_graph(), heawood_graph(), p5_example_graph(), cube_expanded_cube()}) {
    auto r = find_pfaffian_orientation(g);
    ASSERT_TRUE(r.orientation.has_value());
    EXPECT_FALSE(r.saturated);
    EXPECT_TRUE(fixtures::orientation_is_pfaffian(g, r.orientation->forward));
    for (const auto& c : conformal_cycles(g).cycles) {
      EXPECT_TRUE(oddly_oriented(g, *r.orientation, c));
      // Even cycles: the parity does not depend on the traversal direction.
      EXPECT_TRUE(oddly_oriented(g, *r.orientation, VertexCycle(c.rbegin(), c.rend())));
    }
  }
}

TEST(Pfaffian, AgreesWithBruteForceOnSmallGraphs) {
  EXPECT_FALSE(fixtures::brute_force_pfaffian(k33_graph()));
  EXPECT_FALSE(find_pfaffian_orientation(k33_graph()).orientation.has_value());
  EXPECT_TRUE(fixtures::brute_force_pfaffian(cube_graph()));
  std::mt19937_64 rng(9);
  std::bernoulli_distribution coin(0.5);
  int checked = 0;
  while (checked < 25) {
    std::vector<Edge> es;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (a == b || coin(rng)) es.push_back({a, 4 + b});
    BipartiteGraph g = coloured(BipartiteGraph(8, es));
    if (g.edge_count() > 14 || !is_connected(g)) continue;
    ++checked;
    bool brute = fixtures::brute_force_pfaffian(g);
    auto r = find_pfaffian_orientation(g);
    EXPECT_EQ(r.orientation.has_value(), brute);
    if (r.orientation) {
      EXPECT_TRUE(fixtures::orientation_is_pfaffian(g, r.orientation->forward));
    }
    if (is_matching_covered(g)) {
      EXPECT_EQ(find_conformal_k33_bisubdivision(g).has_value(), !brute);
    }
  }
}

TEST(Pfaffian, GraphAndBracesConsistent) {
  for (const auto& g : {cube_expanded_cube(), p5_example_graph(), asano_graph()}) {
    auto r = braces_pfaffian_consistency(g);
    ASSERT_TRUE(r.graph_pfaffian.has_value());
    EXPECT_TRUE(r.consistent());
    EXPECT_TRUE(*r.graph_pfaffian);
  }
}
