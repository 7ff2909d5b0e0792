#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barnette/graph.hpp"
#include "barnette/matching.hpp"
#include "barnette/tightcut.hpp"

namespace barnette {

/// A Hamiltonian cycle as a cyclic vertex order plus its edges (edge i joins
/// vertex_sequence[i] and vertex_sequence[i+1 mod n]).
struct HamiltonianCycle {
  std::vector<Vertex> vertex_sequence;
  std::vector<EdgeId> edge_ids;
};

namespace detail {

// Exact search over edge states with degree-2 propagation. State is copied per branch;
// at desk scale that is cheaper to get right than an undo trail.
class HamiltonSearch {
 public:
  explicit HamiltonSearch(const BipartiteGraph& g) : g_(g), n_(g.vertex_count()), m_(g.edge_count()) {}

  std::optional<std::vector<EdgeId>> run(const std::vector<EdgeId>& forced, const std::vector<EdgeId>& forbidden) {
    State s;
    s.status.assign(m_, kFree);
    s.in_deg.assign(n_, 0);
    s.avail.resize(n_);
    for (Vertex v = 0; v < n_; ++v) s.avail[v] = g_.degree(v);
    s.end.resize(n_);
    for (Vertex v = 0; v < n_; ++v) s.end[v] = v;
    for (EdgeId e : forbidden)
      if (!exclude(s, e)) return std::nullopt;
    for (EdgeId e : forced)
      if (!include(s, e)) return std::nullopt;
    if (!propagate(s)) return std::nullopt;
    if (!solve(s)) return std::nullopt;
    return result_;
  }

 private:
  static constexpr char kFree = 0, kIn = 1, kOut = 2;

  struct State {
    std::vector<char> status;
    std::vector<int> in_deg, avail, end;
    int in_count = 0;
    std::vector<Vertex> dirty;
  };

  bool include(State& s, EdgeId e) {
    if (s.status[e] == kIn) return true;
    if (s.status[e] == kOut) return false;
    const Vertex a = g_.edge(e).u, b = g_.edge(e).v;
    if (s.in_deg[a] >= 2 || s.in_deg[b] >= 2) return false;
    const bool closes = s.end[a] == b;
    if (closes && s.in_count + 1 != n_) return false;
    s.status[e] = kIn;
    ++s.in_count;
    ++s.in_deg[a], ++s.in_deg[b];
    if (!closes) {
      const Vertex ea = s.end[a], eb = s.end[b];
      s.end[ea] = eb, s.end[eb] = ea;
    }
    s.dirty.push_back(a), s.dirty.push_back(b);
    return true;
  }

  bool exclude(State& s, EdgeId e) {
    if (s.status[e] == kOut) return true;
    if (s.status[e] == kIn) return false;
    s.status[e] = kOut;
    const Vertex a = g_.edge(e).u, b = g_.edge(e).v;
    if (--s.avail[a] < 2 || --s.avail[b] < 2) return false;
    s.dirty.push_back(a), s.dirty.push_back(b);
    return true;
  }

  bool propagate(State& s) {
    while (!s.dirty.empty()) {
      Vertex v = s.dirty.back();
      s.dirty.pop_back();
      if (s.avail[v] < 2 || s.in_deg[v] > 2) return false;
      if (s.in_deg[v] == 2 && s.avail[v] > 2) {
        for (EdgeId e : g_.incident(v))
          if (s.status[e] == kFree && !exclude(s, e)) return false;
      } else if (s.avail[v] == 2 && s.in_deg[v] < 2) {
        for (EdgeId e : g_.incident(v))
          if (s.status[e] == kFree && !include(s, e)) return false;
      }
    }
    return true;
  }

  bool solve(State& s) {
    if (s.in_count == n_) {
      result_.clear();
      for (EdgeId e = 0; e < m_; ++e)
        if (s.status[e] == kIn) result_.push_back(e);
      return true;
    }
    // Lowest remaining degree first, ties by vertex id.
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v)
      if (s.in_deg[v] < 2 && (best < 0 || s.avail[v] < s.avail[best])) best = v;
    if (best < 0) return false;
    EdgeId branch = -1;
    for (EdgeId e : g_.incident(best))
      if (s.status[e] == kFree) {
        branch = e;
        break;
      }
    if (branch < 0) return false;
    {
      State t = s;
      if (include(t, branch) && propagate(t) && solve(t)) return true;
    }
    return exclude(s, branch) && propagate(s) && solve(s);
  }

  const BipartiteGraph& g_;
  int n_, m_;
  std::vector<EdgeId> result_;
};

inline HamiltonianCycle cycle_from_edges(const BipartiteGraph& g, const std::vector<EdgeId>& ids) {
  std::vector<std::vector<EdgeId>> at(g.vertex_count());
  for (EdgeId e : ids) at[g.edge(e).u].push_back(e), at[g.edge(e).v].push_back(e);
  HamiltonianCycle h;
  Vertex v = 0;
  EdgeId prev = -1;
  for (int i = 0; i < g.vertex_count(); ++i) {
    h.vertex_sequence.push_back(v);
    EdgeId next = at[v][0] == prev ? at[v][1] : at[v][0];
    if (prev < 0) next = std::min(at[v][0], at[v][1]);
    h.edge_ids.push_back(next);
    v = g.edge(next).other(v);
    prev = next;
  }
  return h;
}

inline void validate_constraints(const BipartiteGraph& g, const std::vector<EdgeId>& forced,
                                 const std::vector<EdgeId>& forbidden) {
  VertexSet f = g.empty_edge_set(), x = g.empty_edge_set();
  for (EdgeId e : forced) {
    if (e < 0 || e >= g.edge_count()) throw GraphError("forced edge id out of range");
    f.set(e);
  }
  for (EdgeId e : forbidden) {
    if (e < 0 || e >= g.edge_count()) throw GraphError("forbidden edge id out of range");
    x.set(e);
  }
  if (f.intersects(x)) throw GraphError("an edge is both forced and forbidden");
  std::vector<int> deg(g.vertex_count(), 0);
  f.for_each([&](int e) { ++deg[g.edge(e).u], ++deg[g.edge(e).v]; });
  if (std::any_of(deg.begin(), deg.end(), [](int d) { return d > 2; }))
    throw GraphError("forced edges are not a union of paths");
  // A cycle among forced edges is only acceptable if it is already Hamiltonian.
  std::vector<int> parent(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) parent[v] = v;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  bool cycle = false;
  f.for_each([&](int e) {
    int a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) cycle = true;
    else parent[a] = b;
  });
  if (cycle && static_cast<int>(f.count()) != g.vertex_count())
    throw GraphError("forced edges contain a non-Hamiltonian cycle");
}

}  // namespace detail

/// Hamiltonian cycle containing every forced edge and no forbidden edge, or nullopt.
inline std::optional<HamiltonianCycle> find_hamiltonian_cycle(const BipartiteGraph& g,
                                                              const std::vector<EdgeId>& forced = {},
                                                              const std::vector<EdgeId>& forbidden = {}) {
  detail::validate_constraints(g, forced, forbidden);
  if (g.vertex_count() < 3) return std::nullopt;
  auto ids = detail::HamiltonSearch(g).run(forced, forbidden);
  if (!ids) return std::nullopt;
  return detail::cycle_from_edges(g, *ids);
}

inline bool is_hamiltonian(const BipartiteGraph& g) { return find_hamiltonian_cycle(g).has_value(); }

/// Splits an even Hamiltonian cycle into its two alternating perfect matchings.
inline std::pair<PerfectMatching, PerfectMatching> cycle_to_matchings(const HamiltonianCycle& h) {
  if (h.edge_ids.size() % 2 != 0) throw GraphError("cycle_to_matchings requires an even cycle");
  PerfectMatching a, b;
  for (std::size_t i = 0; i < h.edge_ids.size(); ++i) (i % 2 ? b : a).edge_ids.push_back(h.edge_ids[i]);
  std::sort(a.edge_ids.begin(), a.edge_ids.end());
  std::sort(b.edge_ids.begin(), b.edge_ids.end());
  return {a, b};
}

// ---------------------------------------------------------------------------
// Strengthened Hamiltonicity predicates

/// Outcome of a predicate: witnesses found along the way and, when false, the
/// constraint that could not be met (a path, an edge, or an edge pair).
struct PropertyResult {
  bool holds = true;
  std::vector<Vertex> counterexample_path;
  std::vector<EdgeId> counterexample_edges;  // path edges, or {e} for H-, or {e, f} for H+-
  std::vector<HamiltonianCycle> witnesses;
  explicit operator bool() const { return holds; }
};

namespace detail {

class WitnessCache {
 public:
  explicit WitnessCache(const BipartiteGraph& g) : g_(g) {}

  bool covers(const std::vector<EdgeId>& contains, const std::vector<EdgeId>& avoids) const {
    for (const auto& c : sets_) {
      bool ok = std::all_of(contains.begin(), contains.end(), [&](EdgeId e) { return c.test(e); }) &&
                std::none_of(avoids.begin(), avoids.end(), [&](EdgeId e) { return c.test(e); });
      if (ok) return true;
    }
    return false;
  }

  bool query(const std::vector<EdgeId>& contains, const std::vector<EdgeId>& avoids, PropertyResult& r) {
    if (covers(contains, avoids)) return true;
    auto h = find_hamiltonian_cycle(g_, contains, avoids);
    if (!h) return false;
    VertexSet s = g_.empty_edge_set();
    for (EdgeId e : h->edge_ids) s.set(e);
    sets_.push_back(std::move(s));
    r.witnesses.push_back(std::move(*h));
    return true;
  }

 private:
  const BipartiteGraph& g_;
  std::vector<VertexSet> sets_;
};

// All paths on k vertices, each listed once (first vertex < last vertex).
template <class F>
void for_each_path(const BipartiteGraph& g, int k, F&& f) {
  std::vector<Vertex> verts;
  std::vector<EdgeId> edges;
  VertexSet used = g.empty_vertex_set();
  bool stop = false;
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (stop) return;
    if (static_cast<int>(verts.size()) == k) {
      if (verts.front() < verts.back() || k == 1)
        if (!f(verts, edges)) stop = true;
      return;
    }
    for (EdgeId e : g.incident(v)) {
      Vertex w = g.edge(e).other(v);
      if (used.test(w)) continue;
      used.set(w), verts.push_back(w), edges.push_back(e);
      self(self, w);
      used.reset(w), verts.pop_back(), edges.pop_back();
      if (stop) return;
    }
  };
  for (Vertex s = 0; s < g.vertex_count() && !stop; ++s) {
    used.set(s), verts.push_back(s);
    rec(rec, s);
    used.reset(s), verts.pop_back();
  }
}

}  // namespace detail

/// Every path on k vertices lies in some Hamiltonian cycle. k in {2,...,5}.
inline PropertyResult is_pk_hamiltonian(const BipartiteGraph& g, int k) {
  if (k < 2 || k > 5) throw GraphError("is_pk_hamiltonian supports k in {2,3,4,5}");
  if (g.vertex_count() < k) throw GraphError("graph has fewer than k vertices");
  PropertyResult r;
  detail::WitnessCache cache(g);
  if (!cache.query({}, {}, r)) {
    r.holds = false;
    return r;
  }
  detail::for_each_path(g, k, [&](const std::vector<Vertex>& vs, const std::vector<EdgeId>& es) {
    if (cache.query(es, {}, r)) return true;
    r.holds = false;
    r.counterexample_path = vs;
    r.counterexample_edges = es;
    return false;
  });
  return r;
}

/// For every edge some Hamiltonian cycle avoids it.
inline PropertyResult has_h_minus(const BipartiteGraph& g) {
  PropertyResult r;
  detail::WitnessCache cache(g);
  if (g.edge_count() == 0 || !cache.query({}, {}, r)) {
    r.holds = false;
    return r;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!cache.query({}, {e}, r)) {
      r.holds = false;
      r.counterexample_edges = {e};
      return r;
    }
  return r;
}

/// For every ordered pair of distinct edges (e, f) some Hamiltonian cycle contains e and avoids f.
inline PropertyResult has_h_plus_minus(const BipartiteGraph& g) {
  PropertyResult r;
  detail::WitnessCache cache(g);
  if (g.edge_count() < 2 || !cache.query({}, {}, r)) {
    r.holds = false;
    return r;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
      if (e == f) continue;
      if (!cache.query({e}, {f}, r)) {
        r.holds = false;
        r.counterexample_edges = {e, f};
        return r;
      }
    }
  return r;
}

/// Every 4-cycle of a cubic graph (other than K4) meets a Hamiltonian cycle in a path on
/// four vertices or in two disjoint edges.
inline bool c4_meets_cycle_properly(const BipartiteGraph& g, const HamiltonianCycle& h) {
  VertexSet on = g.empty_edge_set();
  for (EdgeId e : h.edge_ids) on.set(e);
  const int n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex c = a + 1; c < n; ++c) {
      VertexSet common = g.neighbours(a) & g.neighbours(c);
      auto cn = common.to_vector();
      for (std::size_t i = 0; i < cn.size(); ++i)
        for (std::size_t j = i + 1; j < cn.size(); ++j) {
          if (cn[i] < a || cn[j] < a) continue;  // count each 4-cycle from its smallest vertex
          const Vertex b = cn[i], d = cn[j];
          std::vector<EdgeId> cyc{g.edge_id(a, b), g.edge_id(b, c), g.edge_id(c, d), g.edge_id(d, a)};
          int k = 0;
          std::vector<int> deg(4, 0);
          for (int t = 0; t < 4; ++t)
            if (on.test(cyc[t])) ++k, ++deg[t], ++deg[(t + 1) % 4];
          if (k != 2 && k != 3) return false;
          if (k == 2 && std::count(deg.begin(), deg.end(), 2) == 1) return false;  // a P3, not 2xP2
        }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Transfer across tight cuts

struct PropertyProfile {
  bool h_minus = false, p3 = false, h_plus_minus = false, p4 = false;
};

inline PropertyProfile property_profile(const BipartiteGraph& g) {
  return {has_h_minus(g).holds, is_pk_hamiltonian(g, 3).holds, has_h_plus_minus(g).holds,
          is_pk_hamiltonian(g, 4).holds};
}

struct TransferCheck {
  std::string name;
  bool holds = true;
  bool asserted = true;
};

/// Properties of a graph and both contractions of one of its tight cuts, with each
/// implication evaluated on this instance. `shore_side` keeps the shore, `other_side`
/// keeps the complement.
struct TransferReport {
  PropertyProfile graph, shore_side, other_side;
  std::vector<TransferCheck> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds || !c.asserted; });
  }
};

inline TransferReport check_transfer(const BipartiteGraph& g, const Cut& cut) {
  if (!is_cubic_3connected_bipartite(g)) throw GraphError("check_transfer requires a cubic 3-connected bipartite graph");
  const BipartiteGraph cg = coloured(g);
  if (!is_nontrivial(cg, cut) || !is_tight(cg, cut)) throw GraphError("check_transfer requires a non-trivial tight cut");
  auto [keep_shore, keep_other] = contract_both(cg, cut);
  TransferReport r;
  r.graph = property_profile(cg);
  r.shore_side = property_profile(keep_shore.graph);
  r.other_side = property_profile(keep_other.graph);
  const auto& G = r.graph;
  const auto& G1 = r.shore_side;
  const auto& G2 = r.other_side;
  r.checks.push_back({"h_minus_equivalence", G.h_minus == (G1.h_minus && G2.h_minus), true});
  r.checks.push_back({"p3_equivalence", G.p3 == (G1.p3 && G2.p3), true});
  r.checks.push_back({"h_plus_minus_equivalence", G.h_plus_minus == (G1.h_plus_minus && G2.h_plus_minus), true});
  r.checks.push_back({"p4_backward", !(G1.p4 && G2.p4) || G.p4, true});
  r.checks.push_back({"p4_forward", !G.p4 || (G1.p4 && G2.p4), false});
  return r;
}

}  // namespace barnette
