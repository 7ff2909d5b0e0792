#include <gtest/gtest.h>

#include <set>

#include "barnette/catalog.hpp"
#include "barnette/hamiltonicity.hpp"
#include "fixtures.hpp"

using namespace barnette;

namespace {

bool contains_all(const std::vector<EdgeId>& sorted_cycle, const std::vector<EdgeId>& es) {
  return std::all_of(es.begin(), es.end(),
                     [&](EdgeId e) { return std::binary_search(sorted_cycle.begin(), sorted_cycle.end(), e); });
}

bool contains_none(const std::vector<EdgeId>& sorted_cycle, const std::vector<EdgeId>& es) {
  return std::none_of(es.begin(), es.end(),
                      [&](EdgeId e) { return std::binary_search(sorted_cycle.begin(), sorted_cycle.end(), e); });
}

void expect_valid_cycle(const BipartiteGraph& g, const HamiltonianCycle& h) {
  const int n = g.vertex_count();
  ASSERT_EQ(static_cast<int>(h.vertex_sequence.size()), n);
  ASSERT_EQ(static_cast<int>(h.edge_ids.size()), n);
  std::set<Vertex> vs(h.vertex_sequence.begin(), h.vertex_sequence.end());
  EXPECT_EQ(static_cast<int>(vs.size()), n);
  for (int i = 0; i < n; ++i)
    EXPECT_EQ(g.edge_id(h.vertex_sequence[i], h.vertex_sequence[(i + 1) % n]), h.edge_ids[i]);
}

// Predicates straight from the list of all Hamiltonian cycles.
struct Brute {
  std::vector<std::vector<EdgeId>> cycles;
  bool exists(const std::vector<EdgeId>& in, const std::vector<EdgeId>& out) const {
    return std::any_of(cycles.begin(), cycles.end(),
                       [&](const auto& c) { return contains_all(c, in) && contains_none(c, out); });
  }
};

bool brute_pk(const BipartiteGraph& g, const Brute& b, int k) {
  bool ok = !b.cycles.empty();
  std::vector<Vertex> path;
  std::vector<EdgeId> es;
  auto rec = [&](auto&& self) -> void {
    if (!ok) return;
    if (static_cast<int>(path.size()) == k) {
      if (path.front() < path.back() && !b.exists(es, {})) ok = false;
      return;
    }
    for (EdgeId e : g.incident(path.back())) {
      Vertex w = g.edge(e).other(path.back());
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w), es.push_back(e);
      self(self);
      path.pop_back(), es.pop_back();
    }
  };
  for (Vertex s = 0; s < g.vertex_count() && ok; ++s) {
    path = {s};
    rec(rec);
  }
  return ok;
}

std::vector<BipartiteGraph> small_fixtures() {
  return {cube_graph(), k33_graph(), heawood_graph(), p5_example_graph(), cube_expanded_cube()};
}

}  // namespace

TEST(Hamiltonian, FixturesAndValidity) {
  for (const auto& g : small_fixtures()) {
    auto h = find_hamiltonian_cycle(g);
    ASSERT_TRUE(h.has_value());
    expect_valid_cycle(g, *h);
  }
  EXPECT_FALSE(is_hamiltonian(asano_graph()));
  EXPECT_TRUE(is_hamiltonian(b_horton_graph()));
}

TEST(Hamiltonian, ConstrainedSearchMatchesEnumeration) {
  std::mt19937_64 rng(23);
  for (const auto& g : small_fixtures()) {
    Brute b{fixtures::all_hamiltonian_cycles(g)};
    std::uniform_int_distribution<EdgeId> pick(0, g.edge_count() - 1);
    for (int t = 0; t < 40; ++t) {
      std::vector<EdgeId> in{pick(rng)}, out{pick(rng)};
      if (t % 2) in.push_back(pick(rng));
      if (std::find(in.begin(), in.end(), out[0]) != in.end()) continue;
      std::sort(in.begin(), in.end());
      in.erase(std::unique(in.begin(), in.end()), in.end());
      auto h = find_hamiltonian_cycle(g, in, out);
      EXPECT_EQ(h.has_value(), b.exists(in, out));
      if (h) {
        expect_valid_cycle(g, *h);
        auto sorted = h->edge_ids;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_TRUE(contains_all(sorted, in));
        EXPECT_TRUE(contains_none(sorted, out));
      }
    }
  }
}

TEST(Hamiltonian, InvalidConstraintsRejected) {
  auto g = cube_graph();
  EXPECT_THROW(find_hamiltonian_cycle(g, {0}, {0}), GraphError);
  EXPECT_THROW(find_hamiltonian_cycle(g, {99}), GraphError);
}

TEST(Hamiltonian, CycleSplitsIntoTwoPerfectMatchings) {
  auto g = heawood_graph();
  auto [a, b] = cycle_to_matchings(*find_hamiltonian_cycle(g));
  EXPECT_EQ(a.edge_ids.size(), 7u);
  EXPECT_EQ(b.edge_ids.size(), 7u);
  std::vector<EdgeId> all = a.edge_ids;
  all.insert(all.end(), b.edge_ids.begin(), b.edge_ids.end());
  EXPECT_EQ(std::set<EdgeId>(all.begin(), all.end()).size(), 14u);
}

TEST(Predicates, PkAgreesWithEnumeration) {
  for (const auto& g : small_fixtures()) {
    Brute b{fixtures::all_hamiltonian_cycles(g)};
    for (int k = 2; k <= 5; ++k) {
      auto r = is_pk_hamiltonian(g, k);
      EXPECT_EQ(r.holds, brute_pk(g, b, k)) << "k=" << k << " n=" << g.vertex_count();
      if (!r.holds && !r.counterexample_edges.empty()) {
        EXPECT_FALSE(b.exists(r.counterexample_edges, {}));
      }
    }
  }
}

TEST(Predicates, HMinusAndHPlusMinusAgreeWithEnumeration) {
  for (const auto& g : small_fixtures()) {
    Brute b{fixtures::all_hamiltonian_cycles(g)};
    bool hm = true, hpm = true;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      hm = hm && b.exists({}, {e});
      for (EdgeId f = 0; f < g.edge_count(); ++f)
        if (e != f) hpm = hpm && b.exists({e}, {f});
    }
    auto rm = has_h_minus(g);
    auto rpm = has_h_plus_minus(g);
    EXPECT_EQ(rm.holds, hm);
    EXPECT_EQ(rpm.holds, hpm);
    if (!rpm.holds && rpm.counterexample_edges.size() == 2) {
      EXPECT_FALSE(b.exists({rpm.counterexample_edges[0]}, {rpm.counterexample_edges[1]}));
    }
  }
}

TEST(Predicates, KnownValues) {
  EXPECT_FALSE(is_pk_hamiltonian(asano_graph(), 2).holds);
  EXPECT_TRUE(is_pk_hamiltonian(heawood_graph(), 4).holds);
  EXPECT_FALSE(is_pk_hamiltonian(p5_example_graph(), 5).holds);
  EXPECT_TRUE(is_pk_hamiltonian(p5_example_graph(), 4).holds);
  EXPECT_THROW(is_pk_hamiltonian(cube_graph(), 6), GraphError);
}

TEST(Predicates, C4MeetsEveryHamiltonianCycleProperly) {
  for (const auto& g : {cube_graph(), cube_expanded_cube(), p5_example_graph()})
    for (const auto& c : fixtures::all_hamiltonian_cycles(g)) {
      auto h = find_hamiltonian_cycle(g, c, {});
      ASSERT_TRUE(h.has_value());
      EXPECT_TRUE(c4_meets_cycle_properly(g, *h));
    }
}

TEST(Transfer, CubeExpandedCube) {
  auto g = cube_expanded_cube();
  auto cuts = find_tight_cuts_cubic(g);
  ASSERT_EQ(cuts.size(), 1u);
  auto r = check_transfer(g, cuts[0]);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checks.size(), 5u);
}

TEST(Transfer, P5ExampleDashedCut) {
  auto g = p5_example_graph();
  for (const auto& c : find_tight_cuts_cubic(g)) EXPECT_TRUE(check_transfer(g, c).ok());
}

TEST(Transfer, RejectsNonTightCut) {
  auto g = cube_graph();
  VertexSet s = g.empty_vertex_set();
  s.set(0), s.set(1), s.set(3);
  EXPECT_THROW(check_transfer(g, make_cut(g, s)), GraphError);
}
