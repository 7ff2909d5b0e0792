#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "barnette/catalog.hpp"

using namespace barnette;

class CatalogExpectations : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogExpectations, EveryExpectedPropertyHolds) {
  auto e = catalog(GetParam());
  EXPECT_EQ(e.name, GetParam());
  EXPECT_FALSE(e.description.empty());
  for (const auto& [prop, expected] : e.expected_properties)
    EXPECT_EQ(evaluate_property(prop, e.graph), expected) << GetParam() << ": " << prop;
}

INSTANTIATE_TEST_SUITE_P(Fixtures, CatalogExpectations,
                         ::testing::Values("c4", "cube", "k33", "heawood", "asano", "p5_example", "b_horton",
                                           "horton", "cube_expanded_cube"));

TEST(Catalog, SizesAndNames) {
  EXPECT_EQ(catalog("heawood").graph.vertex_count(), 14);
  EXPECT_EQ(catalog("asano").graph.vertex_count(), 26);
  EXPECT_EQ(catalog("asano").vertex_names.size(), 26u);
  EXPECT_EQ(catalog("p5_example").graph.vertex_count(), 14);
  EXPECT_EQ(catalog("b_horton").graph.vertex_count(), 32);
  EXPECT_EQ(catalog("b_horton").vertex_names.front(), "V1");
  EXPECT_EQ(catalog("horton").graph.vertex_count(), 96);
  EXPECT_EQ(catalog("cube_expanded_cube").graph.vertex_count(), 14);
  EXPECT_THROW(catalog("nope"), GraphError);
  EXPECT_THROW(evaluate_property("nope", c4_graph()), GraphError);
}

TEST(Catalog, EveryNameResolvesOrIsGated) {
  for (const auto& name : catalog_names()) {
    if (name == "georges_kelmans" && !std::getenv("BARNETTE_GEORGES_KELMANS")) {
      EXPECT_THROW(catalog(name), GraphError);
      continue;
    }
    EXPECT_NO_THROW(catalog(name));
  }
}

TEST(Catalog, P5ExampleMarks) {
  auto e = catalog("p5_example");
  const auto& g = e.graph;
  ASSERT_EQ(e.marked_edges.at("dashed_cut").size(), 3u);
  ASSERT_EQ(e.marked_edges.at("red_path").size(), 4u);
  // The red edges form a path on five vertices.
  std::map<Vertex, int> deg;
  for (EdgeId id : e.marked_edges.at("red_path")) ++deg[g.edge(id).u], ++deg[g.edge(id).v];
  EXPECT_EQ(deg.size(), 5u);
  int ends = 0;
  for (auto [v, d] : deg) ends += d == 1;
  EXPECT_EQ(ends, 2);
  EXPECT_FALSE(find_hamiltonian_cycle(g, e.marked_edges.at("red_path")).has_value());
}

TEST(Catalog, HortonSpliceVertexValidated) {
  EXPECT_THROW(horton_graph(-1), GraphError);
  EXPECT_THROW(horton_graph(32), GraphError);
}

TEST(Catalog, HortonContainsK33Brace) {
  auto d = tight_cut_decomposition(horton_graph());
  EXPECT_NE(std::find(d.braces.begin(), d.braces.end(), canonical_form(k33_graph())), d.braces.end());
  EXPECT_EQ(std::count(d.braces.begin(), d.braces.end(), canonical_form(b_horton_graph())), 3);
}

TEST(Catalog, GeorgesKelmansFromFile) {
  const std::string path = ::testing::TempDir() + "/gk_heawood.g6";
  {
    std::ofstream out(path);
    out << to_graph6(heawood_graph()) << '\n';
  }
  ::setenv("BARNETTE_GEORGES_KELMANS", path.c_str(), 1);
  auto e = catalog("georges_kelmans");
  EXPECT_EQ(e.graph.vertex_count(), 14);
  ::unsetenv("BARNETTE_GEORGES_KELMANS");
}
