#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "barnette/vertex_set.hpp"

namespace barnette {

using Vertex = int;
using EdgeId = int;

enum class Colour : std::uint8_t { A, B };

inline Colour opposite(Colour c) { return c == Colour::A ? Colour::B : Colour::A; }
inline char to_char(Colour c) { return c == Colour::A ? 'A' : 'B'; }

/// Thrown on violated preconditions throughout the library.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool touches(Vertex w) const { return u == w || v == w; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with stable edge ids and an optional two-colouring.
///
/// Values are immutable once built; every transformation returns a new graph.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  explicit BipartiteGraph(int vertex_count, std::vector<Edge> edges = {},
                          std::optional<std::vector<Colour>> colour = std::nullopt)
      : n_(vertex_count), edges_(std::move(edges)), colour_(std::move(colour)) {
    if (n_ < 0) throw GraphError("negative vertex count");
    adjacency_.assign(n_, VertexSet(n_));
    incident_.assign(n_, {});
    for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
      auto [u, v] = edges_[id];
      if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("edge endpoint out of range");
      if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
      if (adjacency_[u].test(v))
        throw GraphError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
      adjacency_[u].set(v);
      adjacency_[v].set(u);
      incident_[u].push_back(id);
      incident_[v].push_back(id);
    }
    if (colour_) {
      if (static_cast<int>(colour_->size()) != n_) throw GraphError("colour map has wrong length");
      for (const auto& e : edges_)
        if ((*colour_)[e.u] == (*colour_)[e.v])
          throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                           " joins two vertices of the same colour");
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  const VertexSet& neighbours(Vertex v) const { return adjacency_[v]; }
  const std::vector<EdgeId>& incident(Vertex v) const { return incident_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    return adjacency_[u].test(v);
  }

  std::optional<EdgeId> edge_between(Vertex u, Vertex v) const {
    if (!adjacent(u, v)) return std::nullopt;
    for (EdgeId id : incident(u))
      if (edge(id).other(u) == v) return id;
    return std::nullopt;
  }
  EdgeId edge_id(Vertex u, Vertex v) const {
    auto id = edge_between(u, v);
    if (!id) throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    return *id;
  }

  bool has_colour() const { return colour_.has_value(); }
  Colour colour(Vertex v) const {
    if (!colour_) throw GraphError("graph is uncoloured");
    return (*colour_)[v];
  }
  const std::optional<std::vector<Colour>>& colouring() const { return colour_; }

  BipartiteGraph with_colouring(std::vector<Colour> colour) const {
    return BipartiteGraph(n_, edges_, std::move(colour));
  }
  BipartiteGraph without_colouring() const { return BipartiteGraph(n_, edges_); }

  bool is_regular(int d) const {
    for (Vertex v = 0; v < n_; ++v)
      if (degree(v) != d) return false;
    return true;
  }
  bool is_cubic() const { return is_regular(3); }

  VertexSet empty_vertex_set() const { return VertexSet(n_); }
  VertexSet all_vertices() const { return empty_vertex_set().complement(); }
  VertexSet empty_edge_set() const { return VertexSet(edges_.size()); }

  /// Vertices of the given colour class.
  VertexSet colour_class(Colour c) const {
    VertexSet s = empty_vertex_set();
    for (Vertex v = 0; v < n_; ++v)
      if (colour(v) == c) s.set(v);
    return s;
  }

  /// Relabels vertex v to perm[v]; edge ids are preserved.
  BipartiteGraph relabelled(const std::vector<Vertex>& perm) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const auto& e : edges_) es.push_back({perm[e.u], perm[e.v]});
    std::optional<std::vector<Colour>> col;
    if (colour_) {
      col.emplace(colour_->size());
      for (Vertex v = 0; v < n_; ++v) (*col)[perm[v]] = (*colour_)[v];
    }
    return BipartiteGraph(n_, std::move(es), std::move(col));
  }

  /// Drops the given edges and compacts ids; old_to_new maps surviving ids.
  BipartiteGraph normalize_without(const VertexSet& removed_edges,
                                   std::vector<EdgeId>* old_to_new = nullptr) const {
    std::vector<Edge> es;
    if (old_to_new) old_to_new->assign(edges_.size(), -1);
    for (EdgeId id = 0; id < edge_count(); ++id) {
      if (removed_edges.test(id)) continue;
      if (old_to_new) (*old_to_new)[id] = static_cast<EdgeId>(es.size());
      es.push_back(edges_[id]);
    }
    return BipartiteGraph(n_, std::move(es), colour_);
  }

  /// Subgraph induced by keep; new_index maps old vertices to new ones (-1 if dropped).
  BipartiteGraph induced(const VertexSet& keep, std::vector<Vertex>* new_index = nullptr) const {
    std::vector<Vertex> idx(n_, -1);
    int k = 0;
    keep.for_each([&](int v) { idx[v] = k++; });
    std::vector<Edge> es;
    for (const auto& e : edges_)
      if (idx[e.u] >= 0 && idx[e.v] >= 0)
        es.push_back({idx[e.u], idx[e.v]});
    std::optional<std::vector<Colour>> col;
    if (colour_) {
      col.emplace();
      keep.for_each([&](int v) { col->push_back((*colour_)[v]); });
    }
    if (new_index) *new_index = idx;
    return BipartiteGraph(k, std::move(es), std::move(col));
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.colour_ == b.colour_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<Colour>> colour_;
  std::vector<VertexSet> adjacency_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Edge cut around a vertex set (the shore).
struct Cut {
  VertexSet shore;
  std::vector<EdgeId> edge_ids;  // sorted

  friend bool operator==(const Cut&, const Cut&) = default;
};

/// delta(X): ids of edges with exactly one endpoint in shore, ascending.
inline std::vector<EdgeId> boundary(const BipartiteGraph& g, const VertexSet& shore) {
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    if (shore.test(e.u) != shore.test(e.v)) out.push_back(id);
  }
  return out;
}

inline Cut make_cut(const BipartiteGraph& g, VertexSet shore) {
  Cut c{std::move(shore), {}};
  c.edge_ids = boundary(g, c.shore);
  return c;
}

/// Both shores have at least two vertices.
inline bool is_nontrivial(const BipartiteGraph& g, const Cut& c) {
  auto k = c.shore.count();
  return k >= 2 && static_cast<int>(k) <= g.vertex_count() - 2;
}

/// |X ∩ A| - |X ∩ B| for a coloured graph.
inline int colour_imbalance(const BipartiteGraph& g, const VertexSet& shore) {
  int d = 0;
  shore.for_each([&](int v) { d += g.colour(v) == Colour::A ? 1 : -1; });
  return d;
}

/// Returns the shore of the cut oriented so that its A-count exceeds its B-count
/// (the complement when necessary). Balanced shores are returned unchanged.
inline VertexSet orient_shore(const BipartiteGraph& g, const VertexSet& shore) {
  return colour_imbalance(g, shore) < 0 ? shore.complement() : shore;
}

// ---------------------------------------------------------------------------
// Connectivity

/// Connectivity of g restricted to vertices not in removed.
inline bool is_connected_without(const BipartiteGraph& g, const VertexSet& removed) {
  const auto n = g.vertex_count();
  VertexSet alive = removed.complement();
  std::size_t start = alive.first();
  if (start >= alive.size()) return true;
  VertexSet seen(n);
  seen.set(start);
  std::vector<int> stack{static_cast<int>(start)};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    VertexSet fresh = (g.neighbours(v) & alive) - seen;
    fresh.for_each([&](int w) {
      seen.set(w);
      stack.push_back(w);
    });
  }
  return seen == alive;
}

inline bool is_connected(const BipartiteGraph& g) { return is_connected_without(g, g.empty_vertex_set()); }

/// Component index per vertex (-1 for removed vertices); returns the component count.
inline int components(const BipartiteGraph& g, const VertexSet& removed_vertices,
                      const VertexSet& removed_edges, std::vector<int>& label) {
  const int n = g.vertex_count();
  label.assign(n, -1);
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (removed_vertices.test(s) || label[s] >= 0) continue;
    label[s] = count;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId id : g.incident(v)) {
        if (removed_edges.size() && removed_edges.test(id)) continue;
        Vertex w = g.edge(id).other(v);
        if (removed_vertices.test(w) || label[w] >= 0) continue;
        label[w] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return count;
}

namespace detail {

// Up to `limit` internally vertex-disjoint s-t paths via unit-capacity augmentation
// on the split-vertex network.
inline int disjoint_paths(const BipartiteGraph& g, Vertex s, Vertex t, int limit) {
  const int n = g.vertex_count();
  // node 2v = v_in, 2v+1 = v_out; arc v_in->v_out capacity 1 (inf for s,t).
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> net((2 * n));
  auto add = [&](int a, int b, int cap) {
    net[a].push_back({b, cap, static_cast<int>(net[b].size())});
    net[b].push_back({a, 0, static_cast<int>(net[a].size()) - 1});
  };
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
  for (const auto& e : g.edges()) {
    add(2 * e.u + 1, 2 * e.v, 1);
    add(2 * e.v + 1, 2 * e.u, 1);
  }
  int flow = 0;
  const int source = 2 * s + 1, sink = 2 * t;
  while (flow < limit) {
    std::vector<std::pair<int, int>> parent((2 * n), {-1, -1});
    std::queue<int> q;
    q.push(source);
    parent[source] = {source, -1};
    while (!q.empty() && parent[sink].first < 0) {
      int a = q.front();
      q.pop();
      for (int i = 0; i < static_cast<int>(net[a].size()); ++i) {
        const auto& arc = net[a][i];
        if (arc.cap > 0 && parent[arc.to].first < 0) {
          parent[arc.to] = {a, i};
          q.push(arc.to);
        }
      }
    }
    if (parent[sink].first < 0) break;
    for (int b = sink; b != source;) {
      auto [a, i] = parent[b];
      auto& arc = net[a][i];
      arc.cap -= 1;
      net[b][arc.rev].cap += 1;
      b = a;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

/// True iff removing any set of at most k-1 vertices leaves g connected.
/// Subset enumeration for k <= 3, vertex-disjoint paths (Menger) for k = 4.
inline bool is_k_connected(const BipartiteGraph& g, int k) {
  if (k < 1 || k > 4) throw GraphError("is_k_connected supports k in 1..4");
  const int n = g.vertex_count();
  if (k > n - 1) throw GraphError("is_k_connected requires k <= vertex_count - 1");
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  VertexSet removed = g.empty_vertex_set();
  for (Vertex a = 0; a < n; ++a) {
    removed.set(a);
    if (!is_connected_without(g, removed)) return false;
    if (k == 3) {
      for (Vertex b = a + 1; b < n; ++b) {
        removed.set(b);
        bool ok = is_connected_without(g, removed);
        removed.reset(b);
        if (!ok) return false;
      }
    }
    removed.reset(a);
  }
  if (k == 4) {
    for (Vertex s = 0; s < n; ++s)
      for (Vertex t = s + 1; t < n; ++t)
        if (!g.adjacent(s, t) && detail::disjoint_paths(g, s, t, 4) < 4) return false;
  }
  return true;
}

/// Proper 2-colouring with vertex 0 coloured A (per component, lowest vertex A),
/// or nullopt when an odd cycle exists.
inline std::optional<std::vector<Colour>> two_colour(const BipartiteGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> c(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (c[s] >= 0) continue;
    c[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      bool clash = false;
      g.neighbours(v).for_each([&](int w) {
        if (c[w] < 0) {
          c[w] = 1 - c[v];
          q.push(w);
        } else if (c[w] == c[v]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  std::vector<Colour> out(n);
  for (Vertex v = 0; v < n; ++v) out[v] = c[v] == 0 ? Colour::A : Colour::B;
  return out;
}

/// g with its colouring computed by two_colour; throws for non-bipartite input.
inline BipartiteGraph coloured(const BipartiteGraph& g) {
  if (g.has_colour()) return g;
  auto c = two_colour(g);
  if (!c) throw GraphError("graph is not bipartite");
  return g.with_colouring(std::move(*c));
}

/// Cubic, 3-connected and bipartite (planarity is checked by the embedding module).
inline bool is_cubic_3connected_bipartite(const BipartiteGraph& g) {
  return g.vertex_count() >= 4 && g.is_cubic() && two_colour(g).has_value() && is_k_connected(g, 3);
}

}  // namespace barnette
