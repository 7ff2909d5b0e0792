#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "barnette/graph.hpp"

namespace barnette {

/// One side of an edge: the edge traversed starting at `from`.
struct Dart {
  Vertex from = 0;
  EdgeId edge = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// A facial walk as the cyclic sequence of darts that bound it.
using Face = std::vector<Dart>;

/// Combinatorial embedding: cyclic order of incident edges at every vertex.
///
/// Faces are traced by the rule: having entered vertex w along edge e, leave along the
/// successor of e in the rotation at w.
class RotationEmbedding {
 public:
  RotationEmbedding() = default;

  /// Validates that every vertex lists each incident edge exactly once.
  RotationEmbedding(const BipartiteGraph& g, std::vector<std::vector<EdgeId>> rotation)
      : rotation_(std::move(rotation)) {
    if (static_cast<int>(rotation_.size()) != g.vertex_count())
      throw GraphError("rotation system has wrong number of vertices");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto listed = rotation_[v];
      auto incident = g.incident(v);
      std::sort(listed.begin(), listed.end());
      std::sort(incident.begin(), incident.end());
      if (listed != incident)
        throw GraphError("rotation at vertex " + std::to_string(v) + " does not match its incident edges");
    }
  }

  const std::vector<std::vector<EdgeId>>& rotation() const { return rotation_; }
  const std::vector<EdgeId>& at(Vertex v) const { return rotation_[v]; }

  EdgeId successor(Vertex v, EdgeId e) const {
    const auto& rot = rotation_[v];
    auto it = std::find(rot.begin(), rot.end(), e);
    if (it == rot.end()) throw GraphError("edge missing from rotation");
    ++it;
    return it == rot.end() ? rot.front() : *it;
  }

  /// All facial walks; each dart appears in exactly one face.
  std::vector<Face> faces(const BipartiteGraph& g) const {
    const int m = g.edge_count();
    // dart index: 2*e for (edge.u -> edge.v), 2*e+1 for the reverse
    std::vector<char> used(2 * m, 0);
    std::vector<Face> out;
    for (int start = 0; start < 2 * m; ++start) {
      if (used[start]) continue;
      Face face;
      int d = start;
      while (!used[d]) {
        used[d] = 1;
        EdgeId e = d / 2;
        Vertex from = (d % 2 == 0) ? g.edge(e).u : g.edge(e).v;
        face.push_back({from, e});
        Vertex to = g.edge(e).other(from);
        EdgeId next = successor(to, e);
        d = 2 * next + (g.edge(next).u == to ? 0 : 1);
      }
      if (d != start) throw GraphError("rotation system does not define a permutation of darts");
      out.push_back(std::move(face));
    }
    return out;
  }

  /// V - E + F == 2 for a connected graph.
  bool satisfies_euler(const BipartiteGraph& g) const {
    const auto f = static_cast<int>(faces(g).size());
    return g.vertex_count() - g.edge_count() + f == 2;
  }

  friend bool operator==(const RotationEmbedding&, const RotationEmbedding&) = default;

 private:
  std::vector<std::vector<EdgeId>> rotation_;
};

/// Vertex sequence of a face: the tail of every dart in order.
inline std::vector<Vertex> face_vertices(const Face& f) {
  std::vector<Vertex> vs;
  vs.reserve(f.size());
  for (const auto& d : f) vs.push_back(d.from);
  return vs;
}

/// Planar rotation system for a connected graph, or nullopt when g is non-planar.
/// Backed by the Boyer-Myrvold planarity test.
inline std::optional<RotationEmbedding> embed_planar(const BipartiteGraph& g) {
  if (!is_connected(g)) throw GraphError("embed_planar requires a connected graph");
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                       boost::property<boost::vertex_index_t, int>,
                                       boost::property<boost::edge_index_t, int>>;
  using BEdge = boost::graph_traits<BGraph>::edge_descriptor;
  BGraph bg(g.vertex_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    auto [e, ok] = boost::add_edge(g.edge(id).u, g.edge(id).v, bg);
    boost::put(boost::edge_index, bg, e, id);
  }
  std::vector<std::vector<BEdge>> storage(g.vertex_count());
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                    boost::boyer_myrvold_params::embedding = embedding);
  if (!planar) return std::nullopt;
  std::vector<std::vector<EdgeId>> rotation(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (const auto& e : storage[v]) rotation[v].push_back(boost::get(boost::edge_index, bg, e));
  RotationEmbedding emb(g, std::move(rotation));
  if (!emb.satisfies_euler(g)) throw GraphError("planarity backend returned a non-planar rotation");
  return emb;
}

/// A pair of edges on a common face at which a C4-expansion may be applied.
///
/// Colour roles: u, y in A and v, x in B. The face contains the darts p->q and r->s,
/// where {p,q} = {u,v} and {r,s} = {x,y}, in the order p, q, ..., r, s, ...
struct FacialSite {
  EdgeId uv = 0;
  EdgeId xy = 0;
  Vertex u = 0, v = 0, x = 0, y = 0;
  Vertex p = 0, q = 0, r = 0, s = 0;
  int face = 0;
};

/// All C4-expansion sites: edge pairs uv, xy on a common facial cycle whose removal
/// leaves two paths of odd length. Requires a coloured graph.
inline std::vector<FacialSite> facial_c4_expansion_sites(const BipartiteGraph& g, const RotationEmbedding& emb) {
  std::vector<FacialSite> out;
  const auto faces = emb.faces(g);
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    const auto& f = faces[fi];
    const int len = static_cast<int>(f.size());
    auto vs = face_vertices(f);
    auto sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;  // not a cycle
    for (int i = 0; i < len; ++i) {
      for (int j = i + 1; j < len; ++j) {
        const int inner = j - i - 1;
        const int outer = len - (j - i) - 1;
        if (inner % 2 == 0 || outer % 2 == 0) continue;
        FacialSite site;
        site.face = fi;
        site.p = vs[i];
        site.q = vs[(i + 1) % len];
        site.r = vs[j];
        site.s = vs[(j + 1) % len];
        site.uv = f[i].edge;
        site.xy = f[j].edge;
        if (g.colour(site.p) == Colour::A) {
          site.u = site.p, site.v = site.q, site.y = site.r, site.x = site.s;
        } else {
          site.v = site.p, site.u = site.q, site.x = site.r, site.y = site.s;
        }
        if (g.colour(site.u) != Colour::A || g.colour(site.y) != Colour::A) continue;
        out.push_back(site);
      }
    }
  }
  return out;
}

}  // namespace barnette
