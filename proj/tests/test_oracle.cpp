#include <gtest/gtest.h>

#include <map>

#include "barnette/generator.hpp"
#include "oracle/oracle.hpp"

using namespace barnette;

// Golden counts of cubic 3-connected planar bipartite graphs, frozen from the brute-force
// oracle (n = 18 took about 90 s and is not rerun here).
const std::map<int, int> kGolden{{6, 0}, {8, 1}, {10, 0}, {12, 1}, {14, 1}, {16, 2}, {18, 2}};

TEST(Oracle, ReproducesGoldenCountsUpTo14) {
  for (int n = 6; n <= 14; n += 2) EXPECT_EQ(static_cast<int>(oracle::enumerate(n).size()), kGolden.at(n)) << n;
}

TEST(Oracle, GeneratorMatchesGoldenCounts) {
  std::map<int, int> got;
  for (int n = 8; n <= 18; n += 2) got[n] = 0;
  for (const auto& r : generate(18)) ++got[r.vertex_count()];
  for (auto [n, c] : got) EXPECT_EQ(c, kGolden.at(n)) << n;
}

TEST(Oracle, GeneratedGraphsIsomorphicToOracleGraphs) {
  auto recs = generate(16);
  for (int n : {8, 12, 14, 16}) {
    auto expected = oracle::enumerate(n);
    for (const auto& r : recs) {
      if (r.vertex_count() != n) continue;
      oracle::BoostGraph b(n);
      for (const auto& e : r.graph.edges()) boost::add_edge(e.u, e.v, b);
      bool match = std::any_of(expected.begin(), expected.end(),
                               [&](const oracle::BoostGraph& h) { return boost::isomorphism(b, h); });
      EXPECT_TRUE(match) << r.canonical;
    }
  }
}

TEST(Oracle, RejectsNonPlanarAndLowConnectivity) {
  // K3,3 is cubic bipartite but not planar.
  EXPECT_TRUE(oracle::enumerate(6).empty());
  oracle::Rows rows{0b011, 0b011, 0b100};
  EXPECT_FALSE(oracle::connected_without(oracle::adjacency(rows), -1, -1));
}
