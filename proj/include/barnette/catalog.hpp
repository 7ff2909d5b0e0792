#pragma once

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "barnette/constructions.hpp"
#include "barnette/embedding.hpp"
#include "barnette/expansion.hpp"
#include "barnette/generator.hpp"
#include "barnette/hamiltonicity.hpp"
#include "barnette/io.hpp"
#include "barnette/matching.hpp"
#include "barnette/tightcut.hpp"

namespace barnette {

struct CatalogEntry {
  std::string name;
  BipartiteGraph graph;
  std::string description;
  std::map<std::string, bool> expected_properties;
  std::vector<std::string> vertex_names;  // empty when vertices are just numbered
  std::map<std::string, std::vector<EdgeId>> marked_edges;
};

// ---------------------------------------------------------------------------
// Property evaluation shared by catalog self-checks and the CLI

using PropertyFn = std::function<bool(const BipartiteGraph&)>;

inline const std::map<std::string, PropertyFn>& property_table() {
  static const std::map<std::string, PropertyFn> table{
      {"cubic", [](const BipartiteGraph& g) { return g.is_cubic(); }},
      {"bipartite", [](const BipartiteGraph& g) { return two_colour(g).has_value(); }},
      {"connected", [](const BipartiteGraph& g) { return is_connected(g); }},
      {"3-connected", [](const BipartiteGraph& g) { return g.vertex_count() >= 4 && is_k_connected(g, 3); }},
      {"planar", [](const BipartiteGraph& g) { return embed_planar(g).has_value(); }},
      {"matching_covered", [](const BipartiteGraph& g) { return is_matching_covered(g); }},
      {"brace", [](const BipartiteGraph& g) { return is_brace(coloured(g)); }},
      {"cyclically_4_connected", [](const BipartiteGraph& g) { return is_cyclically_4_connected(g); }},
      {"hamiltonian", [](const BipartiteGraph& g) { return is_hamiltonian(g); }},
      {"p2", [](const BipartiteGraph& g) { return is_pk_hamiltonian(g, 2).holds; }},
      {"p3", [](const BipartiteGraph& g) { return is_pk_hamiltonian(g, 3).holds; }},
      {"p4", [](const BipartiteGraph& g) { return is_pk_hamiltonian(g, 4).holds; }},
      {"p5", [](const BipartiteGraph& g) { return is_pk_hamiltonian(g, 5).holds; }},
      {"h_minus", [](const BipartiteGraph& g) { return has_h_minus(g).holds; }},
      {"h_plus_minus", [](const BipartiteGraph& g) { return has_h_plus_minus(g).holds; }},
      {"pfaffian", [](const BipartiteGraph& g) { return find_pfaffian_orientation(g).orientation.has_value(); }},
  };
  return table;
}

inline bool evaluate_property(const std::string& name, const BipartiteGraph& g) {
  const auto& t = property_table();
  auto it = t.find(name);
  if (it == t.end()) throw GraphError("unknown property: " + name);
  return it->second(g);
}

// ---------------------------------------------------------------------------
// Builders

namespace detail {

// Graph from named vertices and "X-Y" edge strings.
struct NamedGraph {
  std::vector<std::string> names;
  std::map<std::string, Vertex> index;
  std::vector<Edge> edges;

  Vertex id(const std::string& s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    index.emplace(s, static_cast<Vertex>(names.size()));
    names.push_back(s);
    return static_cast<Vertex>(names.size()) - 1;
  }
  void add(const std::string& a, const std::string& b) { edges.push_back({id(a), id(b)}); }
  EdgeId edge(const BipartiteGraph& g, const std::string& a, const std::string& b) const {
    return g.edge_id(index.at(a), index.at(b));
  }
};

}  // namespace detail

inline BipartiteGraph c4_graph() {
  return coloured(BipartiteGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
}

inline BipartiteGraph k33_graph() {
  std::vector<Edge> es;
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b) es.push_back({a, b});
  return coloured(BipartiteGraph(6, std::move(es)));
}

/// 14-cycle v1..v14 with chords v1v6, v2v11, v3v8, v4v13, v5v10, v7v12, v9v14 (0-based here).
inline BipartiteGraph heawood_graph() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 14; ++i) es.push_back({i, (i + 1) % 14});
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 6}, {2, 11}, {3, 8}, {4, 13}, {5, 10}, {7, 12}, {9, 14}})
    es.push_back({a - 1, b - 1});
  return coloured(BipartiteGraph(14, std::move(es)));
}

/// Two hubs joined through three copies of an 8-vertex gadget.
inline BipartiteGraph asano_graph(std::vector<std::string>* names = nullptr) {
  detail::NamedGraph ng;
  ng.id("a");
  ng.id("b");
  const std::vector<std::pair<int, int>> gadget{{0, 1}, {0, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 6},
                                                {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
  for (int k = 1; k <= 3; ++k) {
    auto name = [&](int i) { return "g" + std::to_string(k) + "_" + std::to_string(i); };
    for (auto [x, y] : gadget) ng.add(name(x), name(y));
    ng.add("a", name(0));
    ng.add(name(7), "b");
  }
  if (names) *names = ng.names;
  return coloured(BipartiteGraph(static_cast<int>(ng.names.size()), ng.edges));
}

inline detail::NamedGraph p5_example_named() {
  detail::NamedGraph ng;
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"V1", "V2"}, {"V4", "V1"}, {"U1", "U2"}, {"U2", "U3"}, {"U3", "U4"}, {"U4", "U1"}, {"V1", "U1"},
           {"V2", "U2"}, {"V4", "U4"}, {"W1", "W2"}, {"A4", "W1"}, {"W2", "W4"}, {"A2", "A3"}, {"A3", "A4"},
           {"A4", "A1"}, {"A2", "A1"}, {"W2", "A1"}, {"W4", "A2"}, {"V2", "W4"}, {"V4", "W1"}, {"U3", "A3"}})
    ng.add(a, b);
  return ng;
}

/// The 14-vertex graph with a 5-vertex path that lies in no Hamiltonian cycle.
inline BipartiteGraph p5_example_graph() {
  auto ng = p5_example_named();
  return coloured(BipartiteGraph(static_cast<int>(ng.names.size()), ng.edges));
}

/// 32-vertex non-Pfaffian brace: two 16-vertex pieces joined by four cross edges.
/// Vertices V1..V16 are 0..15 and U1..U16 are 16..31.
inline BipartiteGraph b_horton_graph() {
  std::vector<Edge> es;
  for (int half = 0; half < 2; ++half) {
    const int o = 16 * half;
    auto v = [&](int i) { return o + i - 1; };
    for (int i = 1; i < 8; ++i) es.push_back({v(i), v(i + 1)});
    for (int i = 9; i < 16; ++i) es.push_back({v(i), v(i + 1)});
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {1, 6}, {2, 13}, {3, 8}, {4, 15}, {5, 10}, {7, 12}, {9, 14}, {11, 16}})
      es.push_back({v(a), v(b)});
  }
  auto V = [](int i) { return i - 1; };
  auto U = [](int i) { return 16 + i - 1; };
  es.push_back({V(9), U(8)});
  es.push_back({V(1), U(16)});
  es.push_back({V(8), U(1)});
  es.push_back({V(16), U(9)});
  std::vector<Colour> col(32);
  for (int i = 0; i < 32; ++i) col[i] = (i % 16) % 2 == 0 ? Colour::A : Colour::B;  // odd labels in A
  return BipartiteGraph(32, std::move(es), std::move(col));
}

/// K3,3 with a copy of b_horton spliced into each vertex of one colour class, at
/// b_horton vertex `splice_vertex`. Neighbours are paired in ascending order.
inline BipartiteGraph horton_graph(Vertex splice_vertex = 0) {
  BipartiteGraph g = k33_graph();
  const BipartiteGraph b = b_horton_graph();
  if (splice_vertex < 0 || splice_vertex >= b.vertex_count()) throw GraphError("splice vertex out of range");
  // current[i]: id of K3,3's vertex i in g, -1 once it has been spliced away.
  std::vector<Vertex> current{0, 1, 2, 3, 4, 5};
  for (Vertex t : {0, 1, 2}) {
    const Vertex u = current[t];
    auto nu = g.neighbours(u).to_vector();
    auto nv = b.neighbours(splice_vertex).to_vector();
    std::vector<std::pair<Vertex, Vertex>> pairing;
    for (std::size_t i = 0; i < nu.size(); ++i) pairing.emplace_back(nu[i], nv[i]);
    auto r = splice(g, u, b, splice_vertex, pairing);
    for (auto& c : current) c = c < 0 || c == u ? -1 : r.from_g1[c];
    g = r.graph;
  }
  return g;
}

inline BipartiteGraph cube_expanded_cube() {
  auto cube = cube_graph();
  return cube_expand(cube, *embed_planar(cube), 0).graph;
}

// ---------------------------------------------------------------------------
// Catalog

inline std::vector<std::string> catalog_names() {
  return {"c4", "cube", "k33", "heawood", "asano", "p5_example", "b_horton", "horton", "cube_expanded_cube",
          "georges_kelmans"};
}

/// Named fixture. The Georges-Kelmans graph is only available when the environment
/// variable BARNETTE_GEORGES_KELMANS names a graph6 file with its adjacency.
inline CatalogEntry catalog(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  if (name == "c4") {
    e.graph = c4_graph();
    e.description = "4-cycle; the smallest brace";
    e.expected_properties = {{"bipartite", true}, {"planar", true}, {"brace", true}, {"hamiltonian", true},
                             {"matching_covered", true}, {"pfaffian", true}};
  } else if (name == "cube") {
    e.graph = cube_graph();
    e.description = "3-cube; the smallest cubic 3-connected planar bipartite graph";
    e.expected_properties = {{"cubic", true},      {"bipartite", true}, {"3-connected", true},
                             {"planar", true},     {"brace", true},     {"cyclically_4_connected", true},
                             {"hamiltonian", true}, {"p2", true},       {"pfaffian", true}};
  } else if (name == "k33") {
    e.graph = k33_graph();
    e.description = "K3,3; the canonical non-Pfaffian brace";
    e.expected_properties = {{"cubic", true},  {"bipartite", true}, {"3-connected", true}, {"planar", false},
                             {"brace", true},  {"hamiltonian", true}, {"p3", true},        {"p4", true},
                             {"pfaffian", false}};
  } else if (name == "heawood") {
    e.graph = heawood_graph();
    e.description = "Heawood graph; a non-planar Pfaffian brace";
    e.expected_properties = {{"cubic", true}, {"bipartite", true}, {"3-connected", true}, {"planar", false},
                             {"brace", true}, {"hamiltonian", true}, {"p3", true},       {"p4", true},
                             {"h_minus", true}, {"h_plus_minus", true}, {"pfaffian", true}};
  } else if (name == "asano") {
    e.graph = asano_graph(&e.vertex_names);
    e.description = "26-vertex non-Hamiltonian graph: two hubs joined by three 8-vertex gadgets";
    // Removing both hubs disconnects the gadgets, so the graph is only 2-connected.
    e.expected_properties = {{"cubic", true},         {"bipartite", true},  {"planar", true},
                             {"3-connected", false},  {"hamiltonian", false}, {"brace", false},
                             {"matching_covered", true}, {"h_minus", false}, {"h_plus_minus", false},
                             {"pfaffian", true}};
  } else if (name == "p5_example") {
    auto ng = p5_example_named();
    e.graph = coloured(BipartiteGraph(static_cast<int>(ng.names.size()), ng.edges));
    e.vertex_names = ng.names;
    e.description = "14-vertex graph with a marked 5-vertex path that no Hamiltonian cycle contains";
    e.marked_edges["dashed_cut"] = {ng.edge(e.graph, "V2", "W4"), ng.edge(e.graph, "V4", "W1"),
                                    ng.edge(e.graph, "U3", "A3")};
    e.marked_edges["red_path"] = {ng.edge(e.graph, "U3", "A3"), ng.edge(e.graph, "A3", "A4"),
                                  ng.edge(e.graph, "A4", "W1"), ng.edge(e.graph, "W1", "V4")};
    for (auto& [k, v] : e.marked_edges)
      if (k == "dashed_cut") std::sort(v.begin(), v.end());
    e.expected_properties = {{"cubic", true}, {"bipartite", true}, {"3-connected", true}, {"planar", true},
                             {"brace", false}, {"hamiltonian", true}, {"p4", true}, {"p5", false}};
  } else if (name == "b_horton") {
    e.graph = b_horton_graph();
    e.description = "32-vertex non-Pfaffian brace used to build the Horton graph";
    for (int i = 1; i <= 16; ++i) e.vertex_names.push_back("V" + std::to_string(i));
    for (int i = 1; i <= 16; ++i) e.vertex_names.push_back("U" + std::to_string(i));
    e.expected_properties = {{"cubic", true}, {"bipartite", true}, {"3-connected", true}, {"planar", false},
                             {"brace", true}, {"p2", true},        {"pfaffian", false}};
  } else if (name == "horton") {
    e.graph = horton_graph();
    e.description = "96-vertex graph: three copies of b_horton spliced into one colour class of K3,3";
    e.expected_properties = {{"cubic", true}, {"bipartite", true}, {"3-connected", true}, {"planar", false},
                             {"brace", false}};
  } else if (name == "cube_expanded_cube") {
    e.graph = cube_expanded_cube();
    e.description = "cube with one vertex replaced by a cube gadget; one non-trivial tight cut";
    e.expected_properties = {{"cubic", true}, {"bipartite", true}, {"3-connected", true}, {"planar", true},
                             {"brace", false}, {"cyclically_4_connected", false}, {"hamiltonian", true}};
  } else if (name == "georges_kelmans") {
    const char* path = std::getenv("BARNETTE_GEORGES_KELMANS");
    if (!path) throw GraphError("georges_kelmans is disabled; set BARNETTE_GEORGES_KELMANS to a graph6 file");
    std::ifstream in(path);
    if (!in) throw GraphError(std::string("cannot open ") + path);
    auto graphs = read_graphs(in);
    if (graphs.size() != 1) throw GraphError("expected exactly one graph in " + std::string(path));
    e.graph = coloured(graphs[0]);
    e.description = "50-vertex Georges-Kelmans graph (adjacency supplied externally)";
    e.expected_properties = {{"cubic", true}, {"bipartite", true}, {"3-connected", true}, {"brace", true}};
  } else {
    throw GraphError("unknown catalog entry: " + name);
  }
  return e;
}

}  // namespace barnette
