#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "barnette/canonical.hpp"
#include "barnette/graph.hpp"
#include "barnette/matching.hpp"

namespace barnette {

/// A cut with a stable label inside a family.
struct LabelledCut {
  int label = 0;
  Cut cut;
  friend bool operator==(const LabelledCut&, const LabelledCut&) = default;
};

/// Laminar family of non-trivial tight cuts. Shores are stored oriented to the side
/// whose A-count exceeds its B-count.
struct TightCutFamily {
  std::vector<LabelledCut> cuts;
  int next_label = 0;

  std::size_t size() const { return cuts.size(); }
  bool empty() const { return cuts.empty(); }

  int add(Cut c) {
    cuts.push_back({next_label, std::move(c)});
    return next_label++;
  }

  /// edge id -> labels of the cuts containing it.
  std::vector<std::vector<int>> label_index(int edge_count) const {
    std::vector<std::vector<int>> idx(edge_count);
    for (const auto& lc : cuts)
      for (EdgeId e : lc.cut.edge_ids) idx[e].push_back(lc.label);
    return idx;
  }
};

/// Two cuts are laminar when some shore of one contains some shore of the other.
inline bool laminar(const VertexSet& x, const VertexSet& y) {
  const VertexSet xc = x.complement(), yc = y.complement();
  return x.is_subset_of(y) || y.is_subset_of(x) || !x.intersects(y) || !xc.intersects(yc);
}

inline bool is_laminar_family(const std::vector<Cut>& cuts) {
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = i + 1; j < cuts.size(); ++j)
      if (!laminar(cuts[i].shore, cuts[j].shore)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Tightness

namespace detail {

// Imbalance +-1 and no pair of disjoint cut edges extends to a perfect matching.
inline bool tight_unchecked(const BipartiteGraph& g, const Cut& cut) {
  if (std::abs(colour_imbalance(g, cut.shore)) != 1) return false;
  const auto& ids = cut.edge_ids;
  VertexSet removed = g.empty_vertex_set();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const auto& e = g.edge(ids[i]);
      const auto& f = g.edge(ids[j]);
      if (e.touches(f.u) || e.touches(f.v)) continue;
      for (Vertex v : {e.u, e.v, f.u, f.v}) removed.set(v);
      bool extends = has_perfect_matching_without(g, removed);
      for (Vertex v : {e.u, e.v, f.u, f.v}) removed.reset(v);
      if (extends) return false;
    }
  return true;
}

}  // namespace detail

/// Every perfect matching meets the cut exactly once. Requires a coloured, matching
/// covered graph.
inline bool is_tight(const BipartiteGraph& g, const Cut& cut) {
  if (!g.has_colour()) throw GraphError("is_tight requires a coloured graph");
  if (!is_matching_covered(g)) throw GraphError("is_tight requires a matching covered graph");
  if (cut.edge_ids != boundary(g, cut.shore)) throw GraphError("cut edges do not match its shore");
  return detail::tight_unchecked(g, cut);
}

/// Non-trivial tight cuts of a cubic 3-connected bipartite graph: the non-trivial cuts
/// made of three pairwise disjoint edges. Shores are A-heavy; sorted by edge triple.
inline std::vector<Cut> find_tight_cuts_cubic(const BipartiteGraph& g) {
  if (!g.is_cubic()) throw GraphError("find_tight_cuts_cubic requires a cubic graph");
  const BipartiteGraph cg = coloured(g);
  const int m = g.edge_count();
  std::vector<Cut> out;
  VertexSet removed_edges = g.empty_edge_set();
  std::vector<int> label;
  const VertexSet no_vertices = g.empty_vertex_set();
  auto disjoint = [&](EdgeId a, EdgeId b) {
    const auto& e = g.edge(a);
    const auto& f = g.edge(b);
    return !e.touches(f.u) && !e.touches(f.v);
  };
  for (EdgeId a = 0; a < m; ++a)
    for (EdgeId b = a + 1; b < m; ++b) {
      if (!disjoint(a, b)) continue;
      for (EdgeId c = b + 1; c < m; ++c) {
        if (!disjoint(a, c) || !disjoint(b, c)) continue;
        removed_edges.set(a), removed_edges.set(b), removed_edges.set(c);
        int k = components(g, no_vertices, removed_edges, label);
        removed_edges.reset(a), removed_edges.reset(b), removed_edges.reset(c);
        if (k != 2) continue;
        VertexSet shore = g.empty_vertex_set();
        for (Vertex v = 0; v < g.vertex_count(); ++v)
          if (label[v] == 0) shore.set(v);
        Cut cut = make_cut(cg, orient_shore(cg, shore));
        if (cut.edge_ids.size() != 3 || !is_nontrivial(g, cut)) continue;
        out.push_back(std::move(cut));
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Contraction

/// Result of contracting one shore to a fresh vertex (appended as the last vertex).
struct Contraction {
  BipartiteGraph graph;
  Vertex contraction_vertex = 0;
  std::vector<Vertex> vertex_map;  // old vertex -> new vertex
  std::vector<EdgeId> edge_map;    // old edge -> new edge, -1 when it became a loop
};

namespace detail {

inline Contraction contract_unchecked(const BipartiteGraph& g, const VertexSet& shore) {
  const int n = g.vertex_count();
  Contraction r;
  r.vertex_map.assign(n, -1);
  int k = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!shore.test(v)) r.vertex_map[v] = k++;
  r.contraction_vertex = k;
  shore.for_each([&](int v) { r.vertex_map[v] = k; });
  std::vector<Edge> edges;
  std::map<std::pair<Vertex, Vertex>, EdgeId> seen;
  r.edge_map.assign(g.edge_count(), -1);
  std::optional<Colour> endpoint_colour;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    Vertex a = r.vertex_map[g.edge(id).u], b = r.vertex_map[g.edge(id).v];
    if (a == b) continue;
    if (g.has_colour()) {
      Vertex outside = shore.test(g.edge(id).u) ? g.edge(id).v : g.edge(id).u;
      if (a == k || b == k) {
        Colour c = g.colour(outside);
        if (endpoint_colour && *endpoint_colour != c)
          throw GraphError("cut endpoints outside the shore have mixed colours");
        endpoint_colour = c;
      }
    }
    auto key = std::minmax(a, b);
    auto it = seen.find(key);
    if (it != seen.end()) {
      r.edge_map[id] = it->second;
      continue;
    }
    EdgeId nid = static_cast<EdgeId>(edges.size());
    seen.emplace(key, nid);
    r.edge_map[id] = nid;
    edges.push_back({a, b});
  }
  std::optional<std::vector<Colour>> colour;
  if (g.has_colour()) {
    colour.emplace(k + 1);
    for (Vertex v = 0; v < n; ++v)
      if (!shore.test(v)) (*colour)[r.vertex_map[v]] = g.colour(v);
    (*colour)[k] = endpoint_colour ? opposite(*endpoint_colour) : Colour::A;
  }
  r.graph = BipartiteGraph(k + 1, std::move(edges), std::move(colour));
  return r;
}

}  // namespace detail

/// Contracts `shore` of a tight cut to a single vertex, removing loops and parallel edges.
/// The new vertex takes the colour opposite to the retained cut endpoints.
inline Contraction contract(const BipartiteGraph& g, const Cut& cut, const VertexSet& shore) {
  const BipartiteGraph cg = coloured(g);
  if (!is_tight(cg, cut)) throw GraphError("contract: cut is not tight");
  if (shore != cut.shore && shore != cut.shore.complement())
    throw GraphError("contract: shore does not belong to the cut");
  Contraction r = detail::contract_unchecked(cg, shore);
  if (!is_matching_covered(r.graph)) throw GraphError("contraction lost matching coverage");
  if (cg.is_cubic() && is_k_connected(cg, 3) && is_nontrivial(cg, cut) &&
      !(r.graph.is_cubic() && is_k_connected(r.graph, 3)))
    throw GraphError("contraction of a cubic 3-connected graph left the class");
  return r;
}

/// Both contractions of a tight cut: first contracts the complement (keeps the shore side),
/// second contracts the shore.
inline std::pair<Contraction, Contraction> contract_both(const BipartiteGraph& g, const Cut& cut) {
  return {contract(g, cut, cut.shore.complement()), contract(g, cut, cut.shore)};
}

// ---------------------------------------------------------------------------
// Decomposition

namespace detail {

// Some non-trivial tight cut of a matching covered bipartite graph that is not a brace.
inline std::optional<Cut> find_nontrivial_tight_cut(const BipartiteGraph& g) {
  if (is_c4(g) || g.vertex_count() < 6) return std::nullopt;
  const auto colour = colours_of(g);
  const BipartiteGraph cg = g.has_colour() ? g : g.with_colouring(colour);
  VertexSet s;
  auto q = failing_quartet(cg, colour, &s);
  if (!q) return std::nullopt;
  VertexSet x = s;
  s.for_each([&](int b) { x |= cg.neighbours(b); });
  Cut cut = make_cut(cg, orient_shore(cg, x));
  if (!is_nontrivial(cg, cut) || !tight_unchecked(cg, cut))
    throw GraphError("internal: Hall violator did not give a non-trivial tight cut");
  return cut;
}

}  // namespace detail

struct DecompositionStep {
  int graph_vertices = 0;
  std::vector<EdgeId> cut_edges;
  int shore_size = 0;
};

struct Decomposition {
  std::vector<std::string> braces;  // canonical forms, sorted
  std::vector<DecompositionStep> trace;
};

/// Tight cut decomposition of a matching covered bipartite graph into braces.
/// With an rng, the cut choice and processing order are randomised.
inline Decomposition tight_cut_decomposition(const BipartiteGraph& g, std::mt19937_64* rng = nullptr) {
  if (!is_matching_covered(g)) throw GraphError("tight_cut_decomposition requires a matching covered graph");
  Decomposition out;
  std::vector<BipartiteGraph> work{coloured(g)};
  while (!work.empty()) {
    std::size_t pick = work.size() - 1;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, work.size() - 1)(*rng);
    BipartiteGraph h = std::move(work[pick]);
    work.erase(work.begin() + static_cast<long>(pick));
    if (rng) {
      // Random relabelling steers which cut is found first.
      std::vector<Vertex> perm(h.vertex_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), *rng);
      h = h.relabelled(perm);
    }
    std::optional<Cut> cut;
    if (h.is_cubic() && h.vertex_count() >= 8 && is_k_connected(h, 3)) {
      auto cuts = find_tight_cuts_cubic(h);
      if (!cuts.empty()) {
        std::size_t i = rng ? std::uniform_int_distribution<std::size_t>(0, cuts.size() - 1)(*rng) : 0;
        cut = cuts[i];
      }
    } else {
      cut = detail::find_nontrivial_tight_cut(h);
    }
    if (!cut) {
      out.braces.push_back(canonical_form(h));
      continue;
    }
    out.trace.push_back({h.vertex_count(), cut->edge_ids, static_cast<int>(cut->shore.count())});
    work.push_back(detail::contract_unchecked(h, cut->shore.complement()).graph);
    work.push_back(detail::contract_unchecked(h, cut->shore).graph);
  }
  std::sort(out.braces.begin(), out.braces.end());
  return out;
}

/// At most one component with a cycle after removing any edge set of size < 4.
inline bool is_cyclically_4_connected(const BipartiteGraph& g) {
  if (!g.is_cubic() || !two_colour(g) || !is_k_connected(g, 3))
    throw GraphError("is_cyclically_4_connected requires a cubic 3-connected bipartite graph");
  const int m = g.edge_count();
  const VertexSet no_vertices = g.empty_vertex_set();
  VertexSet removed = g.empty_edge_set();
  std::vector<int> label;
  auto cyclic_components = [&]() {
    int k = components(g, no_vertices, removed, label);
    std::vector<int> verts(k, 0), edges(k, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) ++verts[label[v]];
    for (EdgeId e = 0; e < m; ++e)
      if (!removed.test(e)) ++edges[label[g.edge(e).u]];
    int c = 0;
    for (int i = 0; i < k; ++i)
      if (edges[i] >= verts[i]) ++c;
    return c;
  };
  for (EdgeId a = 0; a < m; ++a) {
    removed.set(a);
    if (cyclic_components() > 1) return false;
    for (EdgeId b = a + 1; b < m; ++b) {
      removed.set(b);
      if (cyclic_components() > 1) return false;
      for (EdgeId c = b + 1; c < m; ++c) {
        removed.set(c);
        bool bad = cyclic_components() > 1;
        removed.reset(c);
        if (bad) return false;
      }
      removed.reset(b);
    }
    removed.reset(a);
  }
  return true;
}

/// Greedy maximal laminar subfamily, scanning cuts in the given order.
inline std::vector<Cut> maximal_laminar_subfamily(const std::vector<Cut>& cuts) {
  std::vector<Cut> chosen;
  for (const auto& c : cuts)
    if (std::all_of(chosen.begin(), chosen.end(), [&](const Cut& d) { return laminar(c.shore, d.shore); }))
      chosen.push_back(c);
  return chosen;
}

}  // namespace barnette
