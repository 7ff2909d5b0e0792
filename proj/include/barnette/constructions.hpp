#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barnette/canonical.hpp"
#include "barnette/graph.hpp"
#include "barnette/io.hpp"
#include "barnette/matching.hpp"
#include "barnette/tightcut.hpp"

namespace barnette {

// ---------------------------------------------------------------------------
// Splice

struct SpliceResult {
  BipartiteGraph graph;
  Cut cut;                        // shore = the vertices that came from g1
  std::vector<Vertex> from_g1;    // g1 vertex -> new vertex (-1 for u)
  std::vector<Vertex> from_g2;    // g2 vertex -> new vertex (-1 for v)
};

/// (g1 - u) + (g2 - v) plus the edges x-pairing(x) for x in N(u). `pairing` lists
/// (x, y) with x a neighbour of u in g1 and y a neighbour of v in g2.
/// g2's colouring is flipped when needed so that the result is properly coloured.
inline SpliceResult splice(const BipartiteGraph& g1, Vertex u, const BipartiteGraph& g2, Vertex v,
                           const std::vector<std::pair<Vertex, Vertex>>& pairing) {
  if (u < 0 || u >= g1.vertex_count() || v < 0 || v >= g2.vertex_count()) throw GraphError("splice vertex out of range");
  if (g1.degree(u) != g2.degree(v)) throw GraphError("splice requires deg(u) = deg(v)");
  if (static_cast<int>(pairing.size()) != g1.degree(u)) throw GraphError("pairing has the wrong size");
  VertexSet xs = g1.empty_vertex_set(), ys = g2.empty_vertex_set();
  for (auto [x, y] : pairing) {
    if (x < 0 || x >= g1.vertex_count() || !g1.adjacent(u, x) || xs.test(x))
      throw GraphError("pairing is not a bijection on N(u)");
    if (y < 0 || y >= g2.vertex_count() || !g2.adjacent(v, y) || ys.test(y))
      throw GraphError("pairing is not onto N(v)");
    xs.set(x), ys.set(y);
  }
  const BipartiteGraph c1 = coloured(g1);
  BipartiteGraph c2 = coloured(g2);
  if (c2.colour(v) == c1.colour(u)) {
    auto flipped = *c2.colouring();
    for (auto& c : flipped) c = opposite(c);
    c2 = c2.with_colouring(std::move(flipped));
  }
  SpliceResult r;
  r.from_g1.assign(g1.vertex_count(), -1);
  r.from_g2.assign(g2.vertex_count(), -1);
  int k = 0;
  std::vector<Colour> colour;
  for (Vertex w = 0; w < g1.vertex_count(); ++w)
    if (w != u) r.from_g1[w] = k++, colour.push_back(c1.colour(w));
  const int shore_size = k;
  for (Vertex w = 0; w < g2.vertex_count(); ++w)
    if (w != v) r.from_g2[w] = k++, colour.push_back(c2.colour(w));
  std::vector<Edge> edges;
  for (const auto& e : g1.edges())
    if (!e.touches(u)) edges.push_back({r.from_g1[e.u], r.from_g1[e.v]});
  for (const auto& e : g2.edges())
    if (!e.touches(v)) edges.push_back({r.from_g2[e.u], r.from_g2[e.v]});
  for (auto [x, y] : pairing) edges.push_back({r.from_g1[x], r.from_g2[y]});
  r.graph = BipartiteGraph(k, std::move(edges), std::move(colour));
  VertexSet shore = r.graph.empty_vertex_set();
  for (Vertex w = 0; w < shore_size; ++w) shore.set(w);
  r.cut = make_cut(r.graph, shore);
  if (is_matching_covered(r.graph) && !detail::tight_unchecked(r.graph, r.cut))
    throw GraphError("internal: splicing cut is not tight");
  return r;
}

// ---------------------------------------------------------------------------
// Trisum

/// Union of three graphs glued along a common 4-cycle. `c4[i]` lists the cycle's
/// vertices in gi in cyclic order; `removed` holds positions k in 0..3 of cycle edges
/// c_k c_{k+1} to delete. New ids: the cycle is 0..3, then the remaining vertices of
/// g1, g2, g3 in order.
inline BipartiteGraph trisum(const std::array<BipartiteGraph, 3>& gs, const std::array<std::array<Vertex, 4>, 3>& c4,
                             const std::vector<int>& removed) {
  std::vector<std::vector<Vertex>> map(3);
  int k = 4;
  std::vector<Colour> colour(4);
  for (int i = 0; i < 3; ++i) {
    const auto& g = gs[i];
    for (int t = 0; t < 4; ++t)
      if (c4[i][t] < 0 || c4[i][t] >= g.vertex_count() || !g.adjacent(c4[i][t], c4[i][(t + 1) % 4]))
        throw GraphError("trisum: cycle is not a 4-cycle of graph " + std::to_string(i + 1));
    VertexSet on = g.empty_vertex_set();
    for (Vertex w : c4[i]) on.set(w);
    if (on.count() != 4) throw GraphError("trisum: cycle vertices repeat");
    if (g.vertex_count() <= 4) throw GraphError("trisum: every part needs vertices outside the cycle");
    BipartiteGraph cg = coloured(g);
    auto col = *cg.colouring();
    if (col[c4[i][0]] != Colour::A)
      for (auto& c : col) c = opposite(c);
    map[i].assign(g.vertex_count(), -1);
    for (int t = 0; t < 4; ++t) map[i][c4[i][t]] = t, colour[t] = t % 2 ? Colour::B : Colour::A;
    for (Vertex w = 0; w < g.vertex_count(); ++w)
      if (map[i][w] < 0) map[i][w] = k++, colour.push_back(col[w]);
  }
  std::vector<Edge> edges;
  for (int t = 0; t < 4; ++t)
    if (std::find(removed.begin(), removed.end(), t) == removed.end()) edges.push_back({t, (t + 1) % 4});
  for (int i = 0; i < 3; ++i)
    for (const auto& e : gs[i].edges()) {
      Vertex a = map[i][e.u], b = map[i][e.v];
      if (a < 4 && b < 4) continue;  // cycle edges handled above
      edges.push_back({a, b});
    }
  for (int t : removed)
    if (t < 0 || t > 3) throw GraphError("trisum: removed edge position out of range");
  return BipartiteGraph(k, std::move(edges), std::move(colour));
}

/// Trisum with every cycle edge removed; cubic inputs give a cubic result (asserted).
inline BipartiteGraph cubic_trisum(const std::array<BipartiteGraph, 3>& gs,
                                   const std::array<std::array<Vertex, 4>, 3>& c4) {
  auto g = trisum(gs, c4, {0, 1, 2, 3});
  if (std::all_of(gs.begin(), gs.end(), [](const BipartiteGraph& h) { return h.is_cubic(); }) && !g.is_cubic())
    throw GraphError("internal: cubic trisum is not cubic");
  return g;
}

// ---------------------------------------------------------------------------
// Conformal subgraphs

inline VertexSet vertices_of(const BipartiteGraph& g, const std::vector<EdgeId>& edges) {
  VertexSet s = g.empty_vertex_set();
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) throw GraphError("subgraph edge id out of range");
    s.set(g.edge(e).u), s.set(g.edge(e).v);
  }
  return s;
}

/// g - V(h) has a perfect matching; h is given by its edges.
inline bool is_conformal_subgraph(const BipartiteGraph& g, const std::vector<EdgeId>& h_edges) {
  return has_perfect_matching_without(g, vertices_of(g, h_edges));
}

inline bool is_conformal_vertex_set(const BipartiteGraph& g, const VertexSet& used) {
  return has_perfect_matching_without(g, used);
}

struct Cross {
  std::vector<Vertex> left;   // a ... c
  std::vector<Vertex> right;  // b ... d
};

namespace detail {

// Simple paths from `from` to `to` through vertices not in `blocked`; f returns true to stop.
template <class F>
bool for_each_simple_path(const BipartiteGraph& g, Vertex from, Vertex to, VertexSet& blocked, F&& f) {
  std::vector<Vertex> path{from};
  blocked.set(from);
  auto rec = [&](auto&& self, Vertex a) -> bool {
    for (Vertex b : g.neighbours(a).to_vector()) {
      if (b == to) {
        path.push_back(b);
        bool stop = f(path);
        path.pop_back();
        if (stop) return true;
        continue;
      }
      if (blocked.test(b)) continue;
      blocked.set(b), path.push_back(b);
      bool stop = self(self, b);
      blocked.reset(b), path.pop_back();
      if (stop) return true;
    }
    return false;
  };
  bool stop = rec(rec, from);
  blocked.reset(from);
  return stop;
}

}  // namespace detail

/// Disjoint paths a-c and b-d, internally disjoint from the 4-cycle a,b,c,d, whose
/// union with the cycle is conformal. Exact search over path pairs.
inline std::optional<Cross> conformal_cross(const BipartiteGraph& g, const std::array<Vertex, 4>& c4) {
  if (!is_brace(coloured(g))) throw GraphError("conformal_cross requires a brace");
  const auto [a, b, c, d] = c4;
  for (int t = 0; t < 4; ++t)
    if (!g.adjacent(c4[t], c4[(t + 1) % 4])) throw GraphError("conformal_cross: not a 4-cycle");
  std::optional<Cross> found;
  VertexSet blocked = g.empty_vertex_set();
  for (Vertex w : c4) blocked.set(w);
  blocked.reset(a), blocked.reset(c);
  blocked.set(b), blocked.set(d);
  detail::for_each_simple_path(g, a, c, blocked, [&](const std::vector<Vertex>& left) {
    if (left.size() == 2) return false;  // ac is an edge, not a path avoiding the cycle
    VertexSet used = blocked;
    for (Vertex w : left) used.set(w);
    used.reset(b), used.reset(d);
    return detail::for_each_simple_path(g, b, d, used, [&](const std::vector<Vertex>& right) {
      if (right.size() == 2) return false;
      VertexSet all = used;
      for (Vertex w : right) all.set(w);
      all.set(b), all.set(d);
      if (!is_conformal_vertex_set(g, all)) return false;
      found = Cross{left, right};
      return true;
    });
  });
  return found;
}

// ---------------------------------------------------------------------------
// Conformal K3,3 bisubdivisions

struct K33Bisubdivision {
  std::array<Vertex, 3> a{}, b{};
  std::vector<std::vector<Vertex>> paths;  // paths[3*i+j] runs a[i] ... b[j]
  std::vector<EdgeId> edges;
};

/// Checks a witness: 9 internally disjoint paths joining the two branch triples, and the
/// union is conformal.
inline bool is_conformal_k33_bisubdivision(const BipartiteGraph& g, const K33Bisubdivision& h) {
  if (h.paths.size() != 9) return false;
  VertexSet used = g.empty_vertex_set();
  for (Vertex w : h.a) used.set(w);
  for (Vertex w : h.b) used.set(w);
  if (used.count() != 6) return false;
  std::vector<EdgeId> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto& p = h.paths[3 * i + j];
      if (p.size() < 2 || p.front() != h.a[i] || p.back() != h.b[j]) return false;
      for (std::size_t t = 0; t + 1 < p.size(); ++t) {
        auto e = g.edge_between(p[t], p[t + 1]);
        if (!e) return false;
        edges.push_back(*e);
      }
      for (std::size_t t = 1; t + 1 < p.size(); ++t) {
        if (used.test(p[t])) return false;
        used.set(p[t]);
      }
    }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
  return is_conformal_vertex_set(g, used);
}

namespace detail {

class K33Search {
 public:
  explicit K33Search(const BipartiteGraph& g) : g_(g), used_(g.empty_vertex_set()) {}

  std::optional<K33Bisubdivision> run() {
    const auto colour = colours_of(g_);
    std::vector<Vertex> as, bs;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (g_.degree(v) >= 3) (colour[v] == Colour::A ? as : bs).push_back(v);
    auto triples = [](const std::vector<Vertex>& vs) {
      std::vector<std::array<Vertex, 3>> out;
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          for (std::size_t k = j + 1; k < vs.size(); ++k) out.push_back({vs[i], vs[j], vs[k]});
      return out;
    };
    const auto ta = triples(as), tb = triples(bs);
    for (const auto& a : ta)
      for (const auto& b : tb) {
        h_.a = a, h_.b = b;
        h_.paths.assign(9, {});
        used_ = g_.empty_vertex_set();
        for (Vertex w : a) used_.set(w);
        for (Vertex w : b) used_.set(w);
        if (route(0)) {
          for (const auto& p : h_.paths)
            for (std::size_t t = 0; t + 1 < p.size(); ++t) h_.edges.push_back(g_.edge_id(p[t], p[t + 1]));
          std::sort(h_.edges.begin(), h_.edges.end());
          return h_;
        }
      }
    return std::nullopt;
  }

 private:
  // Remaining paths at a branch vertex must fit in its unused incident edges.
  bool degree_feasible(int k) const {
    for (int i = 0; i < 3; ++i) {
      int need_a = 0, need_b = 0;
      for (int t = k; t < 9; ++t) need_a += t / 3 == i, need_b += t % 3 == i;
      if (free_degree(h_.a[i]) < need_a || free_degree(h_.b[i]) < need_b) return false;
    }
    return true;
  }

  int free_degree(Vertex v) const {
    int d = 0;
    for (EdgeId e : g_.incident(v)) d += !edge_used(e);
    return d;
  }

  bool edge_used(EdgeId e) const {
    const Vertex x = g_.edge(e).u, y = g_.edge(e).v;
    for (int t = 0; t < 9; ++t) {
      const auto& p = h_.paths[t];
      for (std::size_t s = 0; s + 1 < p.size(); ++s)
        if ((p[s] == x && p[s + 1] == y) || (p[s] == y && p[s + 1] == x)) return true;
    }
    return false;
  }

  // Every unrouted pair is still joined through unused vertices.
  bool reachable_all(int k) const {
    for (int t = k; t < 9; ++t) {
      const Vertex s = h_.a[t / 3], target = h_.b[t % 3];
      if (g_.adjacent(s, target) && !edge_used(g_.edge_id(s, target))) continue;
      VertexSet seen = used_;
      std::vector<Vertex> stack;
      for (Vertex w : g_.neighbours(s).to_vector())
        if (!seen.test(w)) seen.set(w), stack.push_back(w);
      bool ok = false;
      while (!stack.empty() && !ok) {
        Vertex x = stack.back();
        stack.pop_back();
        if (g_.adjacent(x, target)) ok = true;
        g_.neighbours(x).for_each([&](int y) {
          if (!seen.test(y)) seen.set(y), stack.push_back(y);
        });
      }
      if (!ok) return false;
    }
    return true;
  }

  bool route(int k) {
    if (k == 9) return is_conformal_vertex_set(g_, used_);
    if (!degree_feasible(k) || !reachable_all(k)) return false;
    const Vertex s = h_.a[k / 3], target = h_.b[k % 3];
    VertexSet blocked = used_;
    blocked.reset(s);
    return for_each_simple_path(g_, s, target, blocked, [&](const std::vector<Vertex>& p) {
      if (p.size() == 2 && edge_used(g_.edge_id(s, target))) return false;
      for (std::size_t t = 1; t + 1 < p.size(); ++t) used_.set(p[t]);
      h_.paths[k] = p;
      bool done = route(k + 1);
      if (!done) {
        for (std::size_t t = 1; t + 1 < p.size(); ++t) used_.reset(p[t]);
        h_.paths[k].clear();
      }
      return done;
    });
  }

  const BipartiteGraph& g_;
  VertexSet used_;
  K33Bisubdivision h_;
};

}  // namespace detail

/// Exact search for a conformal bisubdivision of K3,3. None exactly when g is Pfaffian.
inline std::optional<K33Bisubdivision> find_conformal_k33_bisubdivision(const BipartiteGraph& g) {
  if (g.vertex_count() > oracle_bound()) throw GraphError("graph exceeds the oracle vertex bound");
  if (!two_colour(g)) throw GraphError("find_conformal_k33_bisubdivision requires a bipartite graph");
  if (!has_perfect_matching(g)) throw GraphError("find_conformal_k33_bisubdivision requires a perfect matching");
  return detail::K33Search(g).run();
}

// ---------------------------------------------------------------------------
// Pfaffian orientations

/// forward[e] means edge e is directed from its stored first endpoint to its second.
struct Orientation {
  std::vector<bool> forward;
};

/// A cycle given as a closed vertex walk v0 v1 ... v_{k-1} (v_k = v0).
using VertexCycle = std::vector<Vertex>;

/// Number of edges directed along the traversal v0 -> v1 -> ... is odd.
inline bool oddly_oriented(const BipartiteGraph& g, const Orientation& o, const VertexCycle& c) {
  int along = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vertex x = c[i], y = c[(i + 1) % c.size()];
    const EdgeId e = g.edge_id(x, y);
    const bool first_to_second = g.edge(e).u == x;
    along += o.forward[e] == first_to_second;
  }
  return along % 2 == 1;
}

struct CycleEnumeration {
  std::vector<VertexCycle> cycles;
  bool saturated = false;
};

/// Every cycle whose vertex complement has a perfect matching, up to `cap` of them.
inline CycleEnumeration conformal_cycles(const BipartiteGraph& g, std::size_t cap = 1'000'000) {
  CycleEnumeration out;
  const int n = g.vertex_count();
  VertexSet on = g.empty_vertex_set();
  std::vector<Vertex> path;
  for (Vertex s = 0; s < n && !out.saturated; ++s) {
    // Cycles whose smallest vertex is s, each once (second vertex < last vertex).
    path.assign(1, s);
    on.set(s);
    auto rec = [&](auto&& self, Vertex a) -> void {
      if (out.saturated) return;
      for (Vertex b : g.neighbours(a).to_vector()) {
        if (b < s) continue;
        if (b == s) {
          if (path.size() >= 4 && path[1] < path.back()) {
            if (has_perfect_matching_without(g, on)) {
              out.cycles.push_back(path);
              if (out.cycles.size() >= cap) out.saturated = true;
            }
          }
          continue;
        }
        if (on.test(b)) continue;
        on.set(b), path.push_back(b);
        self(self, b);
        on.reset(b), path.pop_back();
        if (out.saturated) return;
      }
    };
    rec(rec, s);
    on.reset(s);
  }
  return out;
}

struct PfaffianResult {
  std::optional<Orientation> orientation;
  std::size_t conformal_cycles = 0;
  bool saturated = false;  // cycle cap reached: the answer is not trustworthy
};

namespace detail {

// Gaussian elimination over GF(2); rows carry m coefficient bits plus the right-hand side.
inline std::optional<std::vector<bool>> solve_gf2(std::vector<VertexSet> rows, int m) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < m && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !rows[piv].test(col)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r].test(m)) return std::nullopt;  // 0 = 1
  std::vector<bool> x(m, false);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rows[r].test(m);
  return x;
}

}  // namespace detail

/// Solves one parity constraint per conformal cycle. For a cycle traversed v0 v1 ...,
/// with x_e = forward[e], an odd number of co-directed edges means
///   sum x_e = 1 + (number of edges traversed second -> first)   (mod 2).
inline PfaffianResult find_pfaffian_orientation(const BipartiteGraph& g, std::size_t cap = 1'000'000) {
  if (g.vertex_count() > oracle_bound()) throw GraphError("graph exceeds the oracle vertex bound");
  const int m = g.edge_count();
  auto cycles = conformal_cycles(g, cap);
  PfaffianResult r;
  r.conformal_cycles = cycles.cycles.size();
  r.saturated = cycles.saturated;
  std::vector<VertexSet> rows;
  rows.reserve(cycles.cycles.size());
  for (const auto& c : cycles.cycles) {
    VertexSet row(m + 1);
    int backwards = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vertex x = c[i], y = c[(i + 1) % c.size()];
      const EdgeId e = g.edge_id(x, y);
      row.set(e);
      backwards += g.edge(e).u != x;
    }
    if ((1 + backwards) % 2) row.set(m);
    rows.push_back(std::move(row));
  }
  auto x = detail::solve_gf2(std::move(rows), m);
  if (x) r.orientation = Orientation{*x};
  return r;
}

/// Pfaffian-ness of a graph compared with that of its braces.
struct PfaffianConsistency {
  std::optional<bool> graph_pfaffian;  // absent when g exceeds the oracle bound
  std::vector<std::pair<std::string, bool>> braces;  // canonical form, Pfaffian
  bool braces_all_pfaffian = true;
  bool consistent() const { return !graph_pfaffian || *graph_pfaffian == braces_all_pfaffian; }
};

inline PfaffianConsistency braces_pfaffian_consistency(const BipartiteGraph& g) {
  PfaffianConsistency r;
  if (g.vertex_count() <= oracle_bound()) r.graph_pfaffian = find_pfaffian_orientation(g).orientation.has_value();
  auto d = tight_cut_decomposition(g);
  std::map<std::string, bool> memo;
  for (const auto& form : d.braces) {
    auto it = memo.find(form);
    if (it == memo.end()) {
      auto brace = from_graph6(form);
      it = memo.emplace(form, find_pfaffian_orientation(brace).orientation.has_value()).first;
    }
    r.braces.emplace_back(form, it->second);
    r.braces_all_pfaffian = r.braces_all_pfaffian && it->second;
  }
  return r;
}

}  // namespace barnette
