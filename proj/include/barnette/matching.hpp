#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "barnette/canonical.hpp"
#include "barnette/graph.hpp"

namespace barnette {

/// Edge ids of a perfect matching, ascending.
struct PerfectMatching {
  std::vector<EdgeId> edge_ids;
  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
  friend auto operator<=>(const PerfectMatching&, const PerfectMatching&) = default;
};

namespace detail {

/* Augmenting-path matcher for bipartite graphs. mate[v] holds the matched edge id or -1.
 * Vertices in `removed` and edges in `forbidden` are ignored. Deterministic: free
 * A-vertices are processed by id, neighbours in edge-id order. */
class Matcher {
 public:
  Matcher(const BipartiteGraph& g, const std::vector<Colour>& colour)
      : g_(g), colour_(colour), mate_(g.vertex_count(), -1), removed_(g.empty_vertex_set()),
        forbidden_(g.empty_edge_set()) {}

  void set_removed(const VertexSet& r) { removed_ = r; }
  void set_forbidden(const VertexSet& f) { forbidden_ = f; }
  const VertexSet& removed() const { return removed_; }

  std::vector<EdgeId>& mates() { return mate_; }
  const std::vector<EdgeId>& mates() const { return mate_; }

  Vertex partner(Vertex v) const { return mate_[v] < 0 ? -1 : g_.edge(mate_[v]).other(v); }

  void match(EdgeId e) {
    mate_[g_.edge(e).u] = e;
    mate_[g_.edge(e).v] = e;
  }

  /// Drops matched edges touching removed vertices or using forbidden edges.
  void clean() {
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      EdgeId e = mate_[v];
      if (e < 0) continue;
      Vertex w = g_.edge(e).other(v);
      if (removed_.test(v) || removed_.test(w) || forbidden_.test(e)) mate_[v] = -1;
    }
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (mate_[v] >= 0 && mate_[g_.edge(mate_[v]).other(v)] != mate_[v]) mate_[v] = -1;
  }

  /// BFS for an augmenting path from free A-vertex a; augments and returns true on success.
  bool augment(Vertex a) {
    const int n = g_.vertex_count();
    parent_edge_.assign(n, -1);
    seen_.assign(n, 0);
    std::queue<Vertex> q;
    q.push(a);
    seen_[a] = 1;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (EdgeId e : g_.incident(x)) {
        if (forbidden_.test(e) || e == mate_[x]) continue;
        Vertex b = g_.edge(e).other(x);
        if (removed_.test(b) || seen_[b]) continue;
        seen_[b] = 1;
        parent_edge_[b] = e;
        if (mate_[b] < 0) {
          // flip the path back to a
          Vertex cur = b;
          while (true) {
            EdgeId pe = parent_edge_[cur];
            Vertex prev = g_.edge(pe).other(cur);
            EdgeId prev_mate = mate_[prev];
            mate_[cur] = pe;
            mate_[prev] = pe;
            if (prev == a) return true;
            cur = g_.edge(prev_mate).other(prev);
          }
        }
        Vertex next = g_.edge(mate_[b]).other(b);
        if (!seen_[next]) {
          seen_[next] = 1;
          q.push(next);
        }
      }
    }
    return false;
  }

  /// Augments from every free, non-removed A-vertex; returns matching size.
  int maximise() {
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (colour_[v] == Colour::A && !removed_.test(v) && mate_[v] < 0) augment(v);
    return size();
  }

  int size() const {
    int s = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (mate_[v] >= 0 && colour_[v] == Colour::A) ++s;
    return s;
  }

  /// Every non-removed vertex matched.
  bool perfect() const {
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (!removed_.test(v) && mate_[v] < 0) return false;
    return true;
  }

  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> out;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (mate_[v] >= 0 && colour_[v] == Colour::A) out.push_back(mate_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // A-side vertices reachable from free A-vertices by alternating paths, plus the
  // B-side vertices reached. Used to extract Hall violators after maximise().
  VertexSet alternating_reach_from_free(Colour side) const {
    VertexSet reach = g_.empty_vertex_set();
    std::queue<Vertex> q;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (colour_[v] == side && !removed_.test(v) && mate_[v] < 0) {
        reach.set(v);
        q.push(v);
      }
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (EdgeId e : g_.incident(x)) {
        if (forbidden_.test(e) || e == mate_[x]) continue;
        Vertex b = g_.edge(e).other(x);
        if (removed_.test(b) || reach.test(b)) continue;
        reach.set(b);
        if (mate_[b] >= 0) {
          Vertex next = g_.edge(mate_[b]).other(b);
          if (!reach.test(next)) {
            reach.set(next);
            q.push(next);
          }
        }
      }
    }
    return reach;
  }

 private:
  const BipartiteGraph& g_;
  const std::vector<Colour>& colour_;
  std::vector<EdgeId> mate_;
  VertexSet removed_;
  VertexSet forbidden_;
  std::vector<EdgeId> parent_edge_;
  std::vector<char> seen_;
};

inline std::vector<Colour> colours_of(const BipartiteGraph& g) {
  if (g.has_colour()) return *g.colouring();
  auto c = two_colour(g);
  if (!c) throw GraphError("matching routines require a bipartite graph");
  return *c;
}

}  // namespace detail

/// Maximum-cardinality matching (edge ids ascending), augmenting paths in edge-id order.
inline std::vector<EdgeId> max_matching(const BipartiteGraph& g) {
  auto colour = detail::colours_of(g);
  detail::Matcher m(g, colour);
  m.maximise();
  return m.edges();
}

inline bool has_perfect_matching(const BipartiteGraph& g) {
  return 2 * static_cast<int>(max_matching(g).size()) == g.vertex_count();
}

/// Whether g minus the given vertices has a perfect matching (empty remainder counts).
inline bool has_perfect_matching_without(const BipartiteGraph& g, const VertexSet& removed) {
  auto colour = detail::colours_of(g);
  detail::Matcher m(g, colour);
  m.set_removed(removed);
  m.maximise();
  return m.perfect();
}

/// Some perfect matching of g, or nullopt.
inline std::optional<PerfectMatching> find_perfect_matching(const BipartiteGraph& g) {
  auto mm = max_matching(g);
  if (2 * static_cast<int>(mm.size()) != g.vertex_count()) return std::nullopt;
  return PerfectMatching{std::move(mm)};
}

/// Edges contained in some perfect matching: uv is allowed iff g - u - v has one.
inline VertexSet allowed_edges(const BipartiteGraph& g) {
  auto colour = detail::colours_of(g);
  detail::Matcher base(g, colour);
  base.maximise();
  if (!base.perfect()) throw GraphError("allowed_edges: graph has no perfect matching");
  const auto base_mates = base.mates();
  VertexSet allowed = g.empty_edge_set();
  detail::Matcher m(g, colour);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (base_mates[g.edge(e).u] == e) {
      allowed.set(e);
      continue;
    }
    VertexSet removed = g.empty_vertex_set();
    removed.set(g.edge(e).u);
    removed.set(g.edge(e).v);
    m.mates() = base_mates;
    m.set_removed(removed);
    m.clean();
    m.maximise();
    if (m.perfect()) allowed.set(e);
  }
  return allowed;
}

/// Spanning subgraph on the allowed edges (ids compacted in order).
inline BipartiteGraph cover_graph(const BipartiteGraph& g) {
  auto allowed = allowed_edges(g);
  return g.normalize_without(allowed.complement());
}

/// Connected and every edge lies in a perfect matching.
inline bool is_matching_covered(const BipartiteGraph& g) {
  if (g.vertex_count() < 2 || !is_connected(g) || !has_perfect_matching(g)) return false;
  return allowed_edges(g).count() == static_cast<std::size_t>(g.edge_count());
}

namespace detail {

// First quartet (a1, a2, b1, b2) whose removal leaves no perfect matching, if any.
// Each candidate is repaired from a base perfect matching with at most two augmentations.
struct Quartet {
  Vertex a1, a2, b1, b2;
};

inline std::optional<Quartet> failing_quartet(const BipartiteGraph& g, const std::vector<Colour>& colour,
                                              VertexSet* hall_violator = nullptr) {
  Matcher base(g, colour);
  base.maximise();
  if (!base.perfect()) throw GraphError("graph has no perfect matching");
  const auto base_mates = base.mates();
  std::vector<Vertex> as, bs;
  for (Vertex v = 0; v < g.vertex_count(); ++v) (colour[v] == Colour::A ? as : bs).push_back(v);
  Matcher m(g, colour);
  VertexSet removed = g.empty_vertex_set();
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = i + 1; j < as.size(); ++j)
      for (std::size_t k = 0; k < bs.size(); ++k)
        for (std::size_t l = k + 1; l < bs.size(); ++l) {
          Quartet q{as[i], as[j], bs[k], bs[l]};
          for (Vertex v : {q.a1, q.a2, q.b1, q.b2}) removed.set(v);
          m.set_removed(removed);
          m.mates() = base_mates;
          m.clean();
          m.maximise();
          bool ok = m.perfect();
          if (!ok) {
            if (hall_violator) {
              // B-vertices reachable from free B-vertices: S with |N(S)| < |S| in g - quartet.
              VertexSet reach = m.alternating_reach_from_free(Colour::B);
              VertexSet s = g.empty_vertex_set();
              reach.for_each([&](int v) {
                if (colour[v] == Colour::B) s.set(v);
              });
              *hall_violator = s;
            }
            return q;
          }
          for (Vertex v : {q.a1, q.a2, q.b1, q.b2}) removed.reset(v);
        }
  return std::nullopt;
}

}  // namespace detail

/// k-extendability for k in {1, 2}; k = 2 via the bipartite quartet criterion.
inline bool is_k_extendable(const BipartiteGraph& g, int k) {
  if (k != 1 && k != 2) throw GraphError("is_k_extendable supports k in {1, 2}");
  if (g.vertex_count() < 2 * k + 2) throw GraphError("is_k_extendable requires |V| >= 2k + 2");
  if (!is_connected(g)) throw GraphError("is_k_extendable requires a connected graph");
  if (!is_matching_covered(g)) return false;
  if (k == 1) return true;
  auto colour = detail::colours_of(g);
  return !detail::failing_quartet(g, colour).has_value();
}

inline bool is_c4(const BipartiteGraph& g) {
  return g.vertex_count() == 4 && g.edge_count() == 4 && g.is_regular(2) && is_connected(g);
}

/// C4, or 2-extendable.
inline bool is_brace(const BipartiteGraph& g) {
  if (!is_connected(g)) throw GraphError("is_brace requires a connected graph");
  if (!two_colour(g)) throw GraphError("is_brace requires a bipartite graph");
  if (is_c4(g)) return true;
  if (g.vertex_count() < 6) return false;
  return is_k_extendable(g, 2);
}

/// Vertex cap for exhaustive oracles; BARNETTE_ORACLE_BOUND overrides the default of 40.
inline int oracle_bound() {
  if (const char* env = std::getenv("BARNETTE_ORACLE_BOUND")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 40;
}

struct MatchingEnumeration {
  std::vector<PerfectMatching> matchings;
  bool truncated = false;
};

/// All perfect matchings by backtracking on the lowest unmatched vertex, edge-id order.
inline MatchingEnumeration enumerate_perfect_matchings(const BipartiteGraph& g, std::size_t limit = 1'000'000) {
  if (g.vertex_count() > oracle_bound())
    throw GraphError("enumerate_perfect_matchings: graph exceeds oracle bound of " +
                     std::to_string(oracle_bound()) + " vertices");
  MatchingEnumeration out;
  std::vector<char> covered(g.vertex_count(), 0);
  std::vector<EdgeId> chosen;
  auto rec = [&](auto&& self) -> void {
    if (out.truncated) return;
    Vertex v = 0;
    while (v < g.vertex_count() && covered[v]) ++v;
    if (v == g.vertex_count()) {
      if (out.matchings.size() >= limit) {
        out.truncated = true;
        return;
      }
      auto ids = chosen;
      std::sort(ids.begin(), ids.end());
      out.matchings.push_back({std::move(ids)});
      return;
    }
    for (EdgeId e : g.incident(v)) {
      Vertex w = g.edge(e).other(v);
      if (covered[w]) continue;
      covered[v] = covered[w] = 1;
      chosen.push_back(e);
      self(self);
      chosen.pop_back();
      covered[v] = covered[w] = 0;
    }
  };
  if (g.vertex_count() % 2 == 0) rec(rec);
  return out;
}

}  // namespace barnette
