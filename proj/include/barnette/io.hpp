#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "barnette/graph.hpp"

namespace barnette {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// graph6

/// graph6 encoding (no header, no newline); colours are not represented.
inline std::string to_graph6(const BipartiteGraph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw GraphError("graph6 supports at most 258047 vertices here");
  }
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

/// Decodes one graph6 string; edges are numbered in column-major upper-triangle order.
inline BipartiteGraph from_graph6(std::string_view s) {
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("invalid graph6 byte");
  std::size_t pos = 0;
  int n = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw ParseError("unsupported graph6 size header");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  }
  const std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (s.size() - pos != need) throw ParseError("graph6 body has wrong length");
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = s[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  return BipartiteGraph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// bgf/1 text format
//
//   n m
//   <n colour characters from {A,B,?}>
//   u v            (m lines, edge ids in order)
//   rot v: e1 e2 e3   (optional rotation lines)
//   cut L: e1 e2 e3   (optional labelled cut lines)

struct BgfRecord {
  BipartiteGraph graph;
  std::vector<std::vector<EdgeId>> rotation;  // empty when absent
  std::vector<std::pair<int, std::vector<EdgeId>>> cuts;
};

inline std::string to_bgf(const BgfRecord& rec) {
  const auto& g = rec.graph;
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << (g.has_colour() ? to_char(g.colour(v)) : '?');
  os << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  for (std::size_t v = 0; v < rec.rotation.size(); ++v) {
    os << "rot " << v << ':';
    for (EdgeId e : rec.rotation[v]) os << ' ' << e;
    os << '\n';
  }
  for (const auto& [label, ids] : rec.cuts) {
    os << "cut " << label << ':';
    for (EdgeId e : ids) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

inline std::string to_bgf(const BipartiteGraph& g) { return to_bgf(BgfRecord{g, {}, {}}); }

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    return true;
  }
  return false;
}

inline std::vector<EdgeId> parse_id_list(const std::string& rest) {
  std::istringstream is(rest);
  std::vector<EdgeId> ids;
  EdgeId e;
  while (is >> e) ids.push_back(e);
  if (!is.eof()) throw ParseError("malformed id list: " + rest);
  return ids;
}

}  // namespace detail

/// Reads records until EOF. Trailing `rot`/`cut` lines attach to the preceding record.
inline std::vector<BgfRecord> read_bgf(std::istream& in) {
  std::vector<BgfRecord> out;
  std::string line;
  bool have = detail::next_content_line(in, line);
  while (have) {
    std::istringstream hs(line);
    int n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw ParseError("bad bgf header: " + line);
    std::string colours;
    if (n > 0 && !detail::next_content_line(in, colours)) throw ParseError("missing colour line");
    if (static_cast<int>(colours.size()) != n) throw ParseError("colour line length mismatch");
    bool coloured = colours.find('?') == std::string::npos;
    std::vector<Colour> col;
    for (char c : colours) {
      if (c == 'A') col.push_back(Colour::A);
      else if (c == 'B') col.push_back(Colour::B);
      else if (c != '?') throw ParseError("bad colour character");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
      if (!detail::next_content_line(in, line)) throw ParseError("truncated edge list");
      std::istringstream es(line);
      Edge e;
      if (!(es >> e.u >> e.v)) throw ParseError("bad edge line: " + line);
      edges.push_back(e);
    }
    BgfRecord rec{coloured && n > 0 ? BipartiteGraph(n, std::move(edges), std::move(col))
                                    : BipartiteGraph(n, std::move(edges)),
                  {},
                  {}};
    have = detail::next_content_line(in, line);
    while (have && (line.starts_with("rot ") || line.starts_with("cut "))) {
      auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError("missing ':' in " + line);
      int key = std::stoi(line.substr(4, colon - 4));
      auto ids = detail::parse_id_list(line.substr(colon + 1));
      if (line[0] == 'r') {
        if (key != static_cast<int>(rec.rotation.size())) throw ParseError("rotation lines out of order");
        rec.rotation.push_back(std::move(ids));
      } else {
        rec.cuts.emplace_back(key, std::move(ids));
      }
      have = detail::next_content_line(in, line);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

inline std::vector<BgfRecord> read_bgf(const std::string& text) {
  std::istringstream is(text);
  return read_bgf(is);
}

/// Reads a stream of graphs in either format (detected from the first content line).
inline std::vector<BipartiteGraph> read_graphs(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::istringstream probe(text);
  std::string first;
  std::vector<BipartiteGraph> out;
  if (!detail::next_content_line(probe, first)) return out;
  std::istringstream hs(first);
  int a, b;
  if (hs >> a >> b) {
    for (auto& r : read_bgf(text)) out.push_back(std::move(r.graph));
  } else {
    std::istringstream is(text);
    std::string line;
    while (detail::next_content_line(is, line)) out.push_back(from_graph6(line));
  }
  return out;
}

}  // namespace barnette
