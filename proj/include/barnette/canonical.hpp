#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "barnette/graph.hpp"
#include "barnette/io.hpp"

namespace barnette {

namespace detail {

/* Individualisation-refinement canonical labelling.
 *
 * Ordered partitions are refined to equitable ones by neighbour counts; the search
 * individualises vertices of the first non-singleton cell and keeps the leaf whose
 * relabelled adjacency matrix is lexicographically smallest. Leaves that reproduce
 * the current best matrix yield automorphisms, which prune sibling branches. */
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const BipartiteGraph& g) : g_(g), n_(g.vertex_count()) {}

  std::vector<int> run() {
    std::vector<std::vector<int>> cells;
    if (n_ > 0) {
      cells.emplace_back(n_);
      std::iota(cells[0].begin(), cells[0].end(), 0);
    }
    refine(cells);
    std::vector<int> prefix;
    search(cells, prefix);
    return best_label_;
  }

 private:
  void refine(std::vector<std::vector<int>>& cells) const {
    std::vector<int> count(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        std::fill(count.begin(), count.end(), 0);
        for (int w : cells[s])
          g_.neighbours(w).for_each([&](int v) { ++count[v]; });
        for (std::size_t i = 0; i < cells.size(); ++i) {
          auto& cell = cells[i];
          if (cell.size() < 2) continue;
          bool uniform = std::all_of(cell.begin(), cell.end(), [&](int v) { return count[v] == count[cell[0]]; });
          if (uniform) continue;
          std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return count[a] < count[b]; });
          std::vector<std::vector<int>> parts;
          for (int v : cell) {
            if (parts.empty() || count[parts.back()[0]] != count[v]) parts.emplace_back();
            parts.back().push_back(v);
          }
          cells.erase(cells.begin() + static_cast<long>(i));
          cells.insert(cells.begin() + static_cast<long>(i), parts.begin(), parts.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<std::uint64_t> certificate(const std::vector<int>& label) const {
    const std::size_t words = (n_ + 63) / 64;
    std::vector<std::uint64_t> cert(words * n_, 0);
    for (const auto& e : g_.edges()) {
      int a = label[e.u], b = label[e.v];
      cert[a * words + b / 64] |= std::uint64_t{1} << (63 - b % 64);
      cert[b * words + a / 64] |= std::uint64_t{1} << (63 - a % 64);
    }
    return cert;
  }

  void leaf(const std::vector<std::vector<int>>& cells) {
    std::vector<int> label(n_);
    for (int i = 0; i < n_; ++i) label[cells[i][0]] = i;
    auto cert = certificate(label);
    if (best_label_.empty() || cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_label_ = std::move(label);
      return;
    }
    if (cert == best_cert_) {
      std::vector<int> inverse(n_);
      for (int v = 0; v < n_; ++v) inverse[best_label_[v]] = v;
      std::vector<int> gamma(n_);
      for (int v = 0; v < n_; ++v) gamma[v] = inverse[label[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbits of the group generated by stored automorphisms that fix every vertex of prefix.
  std::vector<int> stabiliser_orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gamma[v] == v; })) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(parent, v), b = find(parent, gamma[v]);
        if (a != b) parent[a] = b;
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  void search(const std::vector<std::vector<int>>& cells, std::vector<int>& prefix) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto ti = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> candidates = *target;
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> tried;
    for (int v : candidates) {
      if (!tried.empty()) {
        auto orbit = stabiliser_orbits(prefix);
        if (std::any_of(tried.begin(), tried.end(), [&](int w) { return orbit[w] == orbit[v]; })) continue;
      }
      tried.push_back(v);
      auto child = cells;
      std::vector<int> rest;
      for (int w : cells[ti])
        if (w != v) rest.push_back(w);
      child[ti] = {v};
      child.insert(child.begin() + static_cast<long>(ti) + 1, rest);
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  const BipartiteGraph& g_;
  int n_;
  std::vector<int> best_label_;
  std::vector<std::uint64_t> best_cert_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace detail

/// Canonical relabelling: vertex v goes to label[v].
inline std::vector<Vertex> canonical_labelling(const BipartiteGraph& g) {
  return detail::CanonicalSearch(g).run();
}

/// Equal strings iff the (uncoloured) graphs are isomorphic. The string is the graph6
/// encoding of the canonically relabelled graph.
inline std::string canonical_form(const BipartiteGraph& g) {
  if (g.vertex_count() == 0) return to_graph6(g);
  return to_graph6(g.without_colouring().relabelled(canonical_labelling(g)));
}

}  // namespace barnette
