#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <vector>

#include "barnette/embedding.hpp"
#include "barnette/graph.hpp"
#include "barnette/tightcut.hpp"

namespace barnette {

/// Where an expansion was applied: a vertex (cube) or a facial edge pair (C4).
struct ExpansionSite {
  enum class Kind { cube, c4 };
  Kind kind = Kind::cube;
  Vertex vertex = -1;  // cube
  FacialSite c4;       // c4

  static ExpansionSite at_vertex(Vertex v) { return {Kind::cube, v, {}}; }
  static ExpansionSite at_face(const FacialSite& s) { return {Kind::c4, -1, s}; }
};

struct CubeExpansion {
  BipartiteGraph graph;
  RotationEmbedding embedding;
  Cut new_cut;
};

struct C4Expansion {
  BipartiteGraph graph;
  RotationEmbedding embedding;
};

namespace detail {

inline void check_class(const BipartiteGraph& g, const RotationEmbedding& emb, bool audit) {
  if (!g.is_cubic()) throw GraphError("expansion result is not cubic");
  if (!emb.satisfies_euler(g)) throw GraphError("expansion result fails the Euler check");
  if (audit && !is_k_connected(g, 3)) throw GraphError("expansion result is not 3-connected");
}

}  // namespace detail

/// Replaces v by a 6-cycle u1..u6 plus a centre w adjacent to u1, u3, u5. The old
/// neighbours n1, n2, n3 (rotation order at v) attach to u2, u4, u6.
///
/// Ids: w keeps v's id, u1..u6 are n..n+5; the old edge to n_i keeps its id; new edges
/// m..m+8 are u1u2, u2u3, u3u4, u4u5, u5u6, u6u1, wu1, wu3, wu5.
/// With `audit`, 3-connectivity and tightness of the new cut are re-verified.
inline CubeExpansion cube_expand(const BipartiteGraph& g, const RotationEmbedding& emb, Vertex v, bool audit = true) {
  if (v < 0 || v >= g.vertex_count() || g.degree(v) != 3) throw GraphError("cube_expand requires a vertex of degree 3");
  const BipartiteGraph cg = coloured(g);
  const int n = cg.vertex_count(), m = cg.edge_count();
  const auto rot_v = emb.at(v);
  const Vertex w = v;
  const std::array<Vertex, 7> u{-1, n, n + 1, n + 2, n + 3, n + 4, n + 5};  // 1-based

  std::vector<Edge> edges = cg.edges();
  for (int i = 0; i < 3; ++i) {
    Edge& e = edges[rot_v[i]];
    (e.u == v ? e.u : e.v) = u[2 * (i + 1)];
  }
  for (int i = 1; i <= 6; ++i) edges.push_back({u[i], u[i % 6 + 1]});
  edges.push_back({w, u[1]});
  edges.push_back({w, u[3]});
  edges.push_back({w, u[5]});

  auto colour = *cg.colouring();
  const Colour cv = cg.colour(v), co = opposite(cv);
  colour.insert(colour.end(), {co, cv, co, cv, co, cv});

  auto rotation = emb.rotation();
  rotation.resize(n + 6);
  const EdgeId c12 = m, c23 = m + 1, c34 = m + 2, c45 = m + 3, c56 = m + 4, c61 = m + 5;
  const EdgeId w1 = m + 6, w3 = m + 7, w5 = m + 8;
  rotation[u[2]] = {rot_v[0], c23, c12};
  rotation[u[4]] = {rot_v[1], c45, c34};
  rotation[u[6]] = {rot_v[2], c61, c56};
  rotation[u[1]] = {c61, c12, w1};
  rotation[u[3]] = {c23, c34, w3};
  rotation[u[5]] = {c45, c56, w5};
  rotation[w] = {w1, w3, w5};

  CubeExpansion r;
  r.graph = BipartiteGraph(n + 6, std::move(edges), std::move(colour));
  r.embedding = RotationEmbedding(r.graph, std::move(rotation));
  detail::check_class(r.graph, r.embedding, audit);
  VertexSet gadget = r.graph.empty_vertex_set();
  gadget.set(w);
  for (int i = 1; i <= 6; ++i) gadget.set(u[i]);
  r.new_cut = make_cut(r.graph, orient_shore(r.graph, gadget));
  if (r.new_cut.edge_ids.size() != 3) throw GraphError("internal: cube gadget cut is not a 3-cut");
  if (audit) {
    if (!is_tight(r.graph, r.new_cut)) throw GraphError("internal: cube gadget cut is not tight");
    auto contracted = contract(r.graph, r.new_cut, gadget.complement());
    if (!contracted.graph.is_cubic() || contracted.graph.vertex_count() != 8 || !is_brace(contracted.graph))
      throw GraphError("internal: cube gadget does not contract to the cube");
  }
  return r;
}

// ---------------------------------------------------------------------------
// C4-expansion

namespace detail {

struct C4Roles {
  Vertex u, v, x, y;
  EdgeId uv, xy;
};

inline C4Roles c4_roles(const BipartiteGraph& g, EdgeId uv, EdgeId xy) {
  if (uv == xy || uv < 0 || xy < 0 || uv >= g.edge_count() || xy >= g.edge_count())
    throw GraphError("C4-expansion needs two distinct edges");
  C4Roles r{};
  r.uv = uv, r.xy = xy;
  const Edge& a = g.edge(uv);
  const Edge& b = g.edge(xy);
  r.u = g.colour(a.u) == Colour::A ? a.u : a.v;
  r.v = a.other(r.u);
  r.y = g.colour(b.u) == Colour::A ? b.u : b.v;
  r.x = b.other(r.y);
  if (r.u == r.y || r.v == r.x) throw GraphError("C4-expansion edges must be vertex-disjoint");
  return r;
}

// Ids: u' = n, v' = n+1, x' = n+2, y' = n+3; uv becomes uu', xy becomes xx';
// m..m+5 are vv', yy', u'v', x'y', u'x', v'y'.
inline BipartiteGraph c4_surgery(const BipartiteGraph& g, const C4Roles& r) {
  const int n = g.vertex_count();
  const Vertex up = n, vp = n + 1, xp = n + 2, yp = n + 3;
  std::vector<Edge> edges = g.edges();
  edges[r.uv] = {r.u, up};
  edges[r.xy] = {r.x, xp};
  edges.push_back({r.v, vp});
  edges.push_back({r.y, yp});
  edges.push_back({up, vp});
  edges.push_back({xp, yp});
  edges.push_back({up, xp});
  edges.push_back({vp, yp});
  auto colour = *g.colouring();
  colour.insert(colour.end(), {Colour::B, Colour::A, Colour::A, Colour::B});
  return BipartiteGraph(n + 4, std::move(edges), std::move(colour));
}

}  // namespace detail

/// C4-expansion at a facial site; the new 4-cycle u'v'y'x' bounds a face inside the old face.
inline C4Expansion c4_expand(const BipartiteGraph& g, const RotationEmbedding& emb, const FacialSite& site,
                             bool audit = true) {
  const BipartiteGraph cg = coloured(g);
  const auto sites = facial_c4_expansion_sites(cg, emb);
  const bool valid = std::any_of(sites.begin(), sites.end(), [&](const FacialSite& s) {
    return s.uv == site.uv && s.xy == site.xy && s.p == site.p && s.r == site.r;
  });
  if (!valid) throw GraphError("c4_expand: not a facial C4-expansion site");
  const auto roles = detail::c4_roles(cg, site.uv, site.xy);
  const int n = cg.vertex_count(), m = cg.edge_count();
  C4Expansion r;
  r.graph = detail::c4_surgery(cg, roles);

  auto prime = [&](Vertex t) {
    if (t == roles.u) return n;
    if (t == roles.v) return n + 1;
    if (t == roles.x) return n + 2;
    return n + 3;
  };
  auto spoke = [&](Vertex t) {  // id of t t'
    if (t == roles.u) return roles.uv;
    if (t == roles.v) return m;
    if (t == roles.x) return roles.xy;
    return m + 1;
  };
  auto rotation = emb.rotation();
  rotation.resize(n + 4);
  for (Vertex t : {roles.u, roles.v, roles.x, roles.y}) {
    const EdgeId old = (t == roles.u || t == roles.v) ? roles.uv : roles.xy;
    std::replace(rotation[t].begin(), rotation[t].end(), old, spoke(t));
  }
  auto id = [&](Vertex a, Vertex b) { return r.graph.edge_id(a, b); };
  const Vertex p = site.p, q = site.q, rr = site.r, s = site.s;
  const Vertex pp = prime(p), qp = prime(q), rp = prime(rr), sp = prime(s);
  rotation[pp] = {spoke(p), id(pp, sp), id(pp, qp)};
  rotation[qp] = {id(pp, qp), id(qp, rp), spoke(q)};
  rotation[rp] = {spoke(rr), id(qp, rp), id(rp, sp)};
  rotation[sp] = {id(rp, sp), id(pp, sp), spoke(s)};
  r.embedding = RotationEmbedding(r.graph, std::move(rotation));
  detail::check_class(r.graph, r.embedding, audit);
  return r;
}

/// The same edge surgery on any coloured bipartite graph, without a facial requirement.
/// u, y must be in A and v, x in B, where uv and xy are the given edges.
inline BipartiteGraph general_c4_expand(const BipartiteGraph& g, EdgeId uv, EdgeId xy) {
  if (!g.has_colour()) throw GraphError("general_c4_expand requires a coloured graph");
  const auto roles = detail::c4_roles(g, uv, xy);
  return detail::c4_surgery(g, roles);
}

// ---------------------------------------------------------------------------
// Family maintenance

/// Family after a cube-expansion at v: edge ids of existing cuts are unchanged (the old
/// edge n_i-v is reused as n_i-u_{2i}); the gadget joins the shore holding v; new_cut is
/// appended.
inline TightCutFamily update_family_cube(const TightCutFamily& fam, const BipartiteGraph& g_new, Vertex v,
                                         const Cut& new_cut) {
  TightCutFamily out;
  out.next_label = fam.next_label;
  const int n_new = g_new.vertex_count();
  for (const auto& lc : fam.cuts) {
    VertexSet shore = lc.cut.shore;
    const int n_old = static_cast<int>(shore.size());
    shore.resize(n_new);
    if (shore.test(v))
      for (Vertex w = n_old; w < n_new; ++w) shore.set(w);
    Cut c = make_cut(g_new, orient_shore(g_new, shore));
    if (c.edge_ids != lc.cut.edge_ids) throw GraphError("internal: cube update changed a cut's edges");
    out.cuts.push_back({lc.label, std::move(c)});
  }
  out.add(new_cut);
  return out;
}

/// Statistics of one C4 family update, for auditing.
struct C4UpdateReport {
  std::vector<int> removed_labels;
  std::vector<int> renamed_labels;
};

/// Family after a C4-expansion at (uv, xy).
///
/// A cut is removable exactly when it separates {u, v} from {x, y}. This is decided by
/// the parity of cut edges along one u-x path found by BFS in the old graph, together
/// with the condition that neither uv nor xy is a cut edge: an odd count alone also
/// flags cuts whose only vertex of {u, v, x, y} on one side is u or x. The parity rule
/// is cross-checked against shore membership.
inline TightCutFamily update_family_c4(const TightCutFamily& fam, const BipartiteGraph& g_old,
                                       const BipartiteGraph& g_new, EdgeId uv, EdgeId xy,
                                       C4UpdateReport* report = nullptr) {
  const BipartiteGraph cg = coloured(g_old);
  const auto roles = detail::c4_roles(cg, uv, xy);
  TightCutFamily out;
  out.next_label = fam.next_label;
  if (fam.empty()) return out;

  // BFS path from u to x.
  std::vector<EdgeId> via(cg.vertex_count(), -1);
  std::vector<char> seen(cg.vertex_count(), 0);
  std::deque<Vertex> queue{roles.u};
  seen[roles.u] = 1;
  while (!queue.empty() && !seen[roles.x]) {
    Vertex a = queue.front();
    queue.pop_front();
    for (EdgeId e : cg.incident(a)) {
      Vertex b = cg.edge(e).other(a);
      if (seen[b]) continue;
      seen[b] = 1, via[b] = e;
      queue.push_back(b);
    }
  }
  if (!seen[roles.x]) throw GraphError("update_family_c4: u and x are disconnected");
  const auto index = fam.label_index(cg.edge_count());
  std::vector<int> crossings(fam.next_label, 0);
  for (Vertex t = roles.x; t != roles.u; t = cg.edge(via[t]).other(t))
    for (int label : index[via[t]]) ++crossings[label];

  const int n = cg.vertex_count(), m = cg.edge_count();
  for (const auto& lc : fam.cuts) {
    const auto& X = lc.cut.shore;
    const auto& ids = lc.cut.edge_ids;
    const bool has_uv = std::find(ids.begin(), ids.end(), uv) != ids.end();
    const bool has_xy = std::find(ids.begin(), ids.end(), xy) != ids.end();
    if (has_uv && has_xy) throw GraphError("a tight cut contains both expansion edges");
    const bool removable = crossings[lc.label] % 2 == 1 && !has_uv && !has_xy;
    const int inside = X.test(roles.u) + X.test(roles.v) + X.test(roles.x) + X.test(roles.y);
    const bool separates = inside == 2 && X.test(roles.u) == X.test(roles.v);
    if (removable != separates) throw GraphError("internal: parity test disagrees with shore membership");
    if (inside == 2 && !separates) throw GraphError("internal: a count-2 cut does not separate {u,v} from {x,y}");
    if (removable) {
      if (report) report->removed_labels.push_back(lc.label);
      continue;
    }
    // New vertices join the side holding at least three of u, v, x, y.
    VertexSet shore = X;
    shore.resize(n + 4);
    if (inside >= 3)
      for (Vertex w = n; w < n + 4; ++w) shore.set(w);
    std::vector<EdgeId> renamed = ids;
    for (auto& e : renamed) {
      if (e == uv && X.test(roles.v) != (inside >= 3)) e = m;      // v alone: uv -> vv'
      if (e == xy && X.test(roles.y) != (inside >= 3)) e = m + 1;  // y alone: xy -> yy'
    }
    std::sort(renamed.begin(), renamed.end());
    if (renamed != ids && report) report->renamed_labels.push_back(lc.label);
    Cut c = make_cut(g_new, orient_shore(g_new, shore));
    if (c.edge_ids != renamed) throw GraphError("internal: renamed cut edges disagree with the new boundary");
    out.cuts.push_back({lc.label, std::move(c)});
  }
  return out;
}

}  // namespace barnette
