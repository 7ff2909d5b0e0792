#pragma once

// Brute-force oracles and small helpers shared by the unit tests. Nothing here calls
// the library algorithm it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "barnette/graph.hpp"

namespace fixtures {

using namespace barnette;

/// Number of perfect matchings by plain recursion on the lowest unmatched vertex.
inline long long count_perfect_matchings(const BipartiteGraph& g, VertexSet removed) {
  const int n = g.vertex_count();
  Vertex v = 0;
  while (v < n && removed.test(v)) ++v;
  if (v == n) return 1;
  long long total = 0;
  removed.set(v);
  g.neighbours(v).for_each([&](int w) {
    if (removed.test(w)) return;
    removed.set(w);
    total += count_perfect_matchings(g, removed);
    removed.reset(w);
  });
  return total;
}

inline long long count_perfect_matchings(const BipartiteGraph& g) {
  return count_perfect_matchings(g, g.empty_vertex_set());
}

/// All perfect matchings as sorted edge-id lists.
inline void all_perfect_matchings(const BipartiteGraph& g, VertexSet removed, std::vector<EdgeId>& current,
                                  std::vector<std::vector<EdgeId>>& out) {
  const int n = g.vertex_count();
  Vertex v = 0;
  while (v < n && removed.test(v)) ++v;
  if (v == n) {
    auto m = current;
    std::sort(m.begin(), m.end());
    out.push_back(m);
    return;
  }
  removed.set(v);
  for (EdgeId e : g.incident(v)) {
    Vertex w = g.edge(e).other(v);
    if (removed.test(w)) continue;
    removed.set(w);
    current.push_back(e);
    all_perfect_matchings(g, removed, current, out);
    current.pop_back();
    removed.reset(w);
  }
}

inline std::vector<std::vector<EdgeId>> all_perfect_matchings(const BipartiteGraph& g) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> cur;
  all_perfect_matchings(g, g.empty_vertex_set(), cur, out);
  return out;
}

/// Every Hamiltonian cycle as a sorted edge-id list (each cycle once).
inline std::vector<std::vector<EdgeId>> all_hamiltonian_cycles(const BipartiteGraph& g) {
  std::vector<std::vector<EdgeId>> out;
  const int n = g.vertex_count();
  if (n < 3) return out;
  std::vector<Vertex> path{0};
  std::vector<EdgeId> edges;
  std::vector<char> used(n, 0);
  used[0] = 1;
  auto rec = [&](auto&& self, Vertex a) -> void {
    if (static_cast<int>(path.size()) == n) {
      auto back = g.edge_between(a, 0);
      if (back && path[1] < a) {
        auto c = edges;
        c.push_back(*back);
        std::sort(c.begin(), c.end());
        out.push_back(c);
      }
      return;
    }
    for (EdgeId e : g.incident(a)) {
      Vertex b = g.edge(e).other(a);
      if (used[b]) continue;
      used[b] = 1, path.push_back(b), edges.push_back(e);
      self(self, b);
      used[b] = 0, path.pop_back(), edges.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Determinant by fraction-free elimination (exact for the small matrices used here).
inline long long determinant(std::vector<std::vector<long long>> a) {
  const int k = static_cast<int>(a.size());
  if (k == 0) return 1;
  __int128 prev = 1;
  int sign = 1;
  std::vector<std::vector<__int128>> m(k, std::vector<__int128>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = a[i][j];
  for (int c = 0; c < k - 1; ++c) {
    int p = c;
    while (p < k && m[p][c] == 0) ++p;
    if (p == k) return 0;
    if (p != c) std::swap(m[p], m[c]), sign = -sign;
    for (int i = c + 1; i < k; ++i)
      for (int j = c + 1; j < k; ++j) m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
    prev = m[c][c];
  }
  return static_cast<long long>(sign * m[k - 1][k - 1]);
}

/// An orientation of a bipartite graph is Pfaffian iff |det| of the signed biadjacency
/// matrix equals the number of perfect matchings.
inline bool orientation_is_pfaffian(const BipartiteGraph& g, const std::vector<bool>& forward) {
  std::vector<int> row(g.vertex_count(), -1), col(g.vertex_count(), -1);
  int ra = 0, cb = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) (g.colour(v) == Colour::A ? row[v] = ra++ : col[v] = cb++);
  if (ra != cb) return false;
  std::vector<std::vector<long long>> m(ra, std::vector<long long>(ra, 0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Vertex a = g.edge(e).u, b = g.edge(e).v;
    bool a_to_b = forward[e];
    if (g.colour(a) != Colour::A) std::swap(a, b), a_to_b = !a_to_b;
    m[row[a]][col[b]] = a_to_b ? 1 : -1;
  }
  return std::llabs(determinant(m)) == count_perfect_matchings(g);
}

/// True when some orientation is Pfaffian, by trying all 2^m of them (m <= 20).
inline bool brute_force_pfaffian(const BipartiteGraph& g) {
  const int m = g.edge_count();
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    std::vector<bool> f(m);
    for (int e = 0; e < m; ++e) f[e] = mask >> e & 1U;
    if (orientation_is_pfaffian(g, f)) return true;
  }
  return false;
}

inline BipartiteGraph random_relabel(const BipartiteGraph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabelled(perm);
}

/// Brute-force tightness: every perfect matching meets the cut exactly once.
inline bool brute_force_tight(const BipartiteGraph& g, const std::vector<EdgeId>& cut) {
  for (const auto& m : all_perfect_matchings(g)) {
    int k = 0;
    for (EdgeId e : m) k += std::count(cut.begin(), cut.end(), e) > 0;
    if (k != 1) return false;
  }
  return true;
}

/// Brute-force 2-extendability: every pair of disjoint edges extends to a perfect matching.
inline bool brute_force_2_extendable(const BipartiteGraph& g) {
  auto pms = all_perfect_matchings(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
      const auto& a = g.edge(e);
      const auto& b = g.edge(f);
      if (a.touches(b.u) || a.touches(b.v)) continue;
      bool found = std::any_of(pms.begin(), pms.end(), [&](const auto& m) {
        return std::binary_search(m.begin(), m.end(), e) && std::binary_search(m.begin(), m.end(), f);
      });
      if (!found) return false;
    }
  return true;
}

}  // namespace fixtures
