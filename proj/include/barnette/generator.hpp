#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "barnette/canonical.hpp"
#include "barnette/embedding.hpp"
#include "barnette/expansion.hpp"
#include "barnette/hamiltonicity.hpp"
#include "barnette/tightcut.hpp"

namespace barnette {

struct GenerationRecord {
  BipartiteGraph graph;
  RotationEmbedding embedding;
  TightCutFamily family;
  std::string canonical;
  std::optional<ExpansionSite> parent_site;
  std::string parent_canonical;
  bool is_brace = true;  // family empty

  int vertex_count() const { return graph.vertex_count(); }
};

/// The cube with a planar rotation, colour A on vertices of even parity.
inline BipartiteGraph cube_graph() {
  std::vector<Edge> es;
  std::vector<Colour> col(8);
  for (Vertex v = 0; v < 8; ++v) {
    col[v] = std::popcount(static_cast<unsigned>(v)) % 2 ? Colour::B : Colour::A;
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) es.push_back({v, v ^ (1 << b)});
  }
  return BipartiteGraph(8, std::move(es), std::move(col));
}

struct GenerateOptions {
  int jobs = 1;
  bool audit = true;  // re-verify 3-connectivity and new cube cuts on every new record
  std::function<void(const GenerationRecord&)> on_record;  // called in output order
};

namespace detail {

struct Candidate {
  std::string canonical;
  BipartiteGraph graph;
  RotationEmbedding embedding;
  ExpansionSite site;
  std::optional<Cut> new_cut;  // cube expansions
  std::size_t parent = 0;
};

inline std::vector<Candidate> expand_all(const GenerationRecord& rec, std::size_t parent_index, int n_max) {
  std::vector<Candidate> out;
  const auto& g = rec.graph;
  const int n = g.vertex_count();
  if (n + 6 <= n_max)
    for (Vertex v = 0; v < n; ++v) {
      auto r = cube_expand(g, rec.embedding, v, false);
      out.push_back({canonical_form(r.graph), std::move(r.graph), std::move(r.embedding), ExpansionSite::at_vertex(v),
                     std::move(r.new_cut), parent_index});
    }
  if (n + 4 <= n_max)
    for (const auto& s : facial_c4_expansion_sites(g, rec.embedding)) {
      auto r = c4_expand(g, rec.embedding, s, false);
      out.push_back({canonical_form(r.graph), std::move(r.graph), std::move(r.embedding), ExpansionSite::at_face(s),
                     std::nullopt, parent_index});
    }
  return out;
}

}  // namespace detail

/// One record per isomorphism class of cubic 3-connected planar bipartite graphs with at
/// most n_max vertices, breadth-first by vertex count, starting from the cube.
inline std::vector<GenerationRecord> generate(int n_max, const GenerateOptions& options = {}) {
  if (n_max < 8 || n_max % 2 != 0) throw GraphError("generate requires an even n_max >= 8");
  std::map<int, std::vector<GenerationRecord>> levels;
  std::unordered_set<std::string> seen;
  {
    GenerationRecord cube;
    cube.graph = cube_graph();
    cube.embedding = *embed_planar(cube.graph);
    cube.canonical = canonical_form(cube.graph);
    seen.insert(cube.canonical);
    levels[8].push_back(std::move(cube));
  }
  std::vector<GenerationRecord> out;
  const int jobs = std::max(1, options.jobs);
  for (int n = 8; n <= n_max; n += 2) {
    auto& level = levels[n];
    // Expansion is pure per record; work is split across threads and merged in record order.
    std::vector<std::vector<detail::Candidate>> produced(level.size());
    auto work = [&](int worker) {
      for (std::size_t i = worker; i < level.size(); i += jobs) produced[i] = detail::expand_all(level[i], i, n_max);
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    for (auto& batch : produced)
      for (auto& c : batch) {
        if (!seen.insert(c.canonical).second) continue;
        const auto& parent = level[c.parent];
        GenerationRecord rec;
        if (c.site.kind == ExpansionSite::Kind::cube) {
          rec.family = update_family_cube(parent.family, c.graph, c.site.vertex, *c.new_cut);
          if (options.audit && !detail::tight_unchecked(c.graph, *c.new_cut))
            throw GraphError("internal: new cube cut is not tight");
        } else {
          rec.family = update_family_c4(parent.family, parent.graph, c.graph, c.site.c4.uv, c.site.c4.xy);
        }
        if (options.audit && !is_k_connected(c.graph, 3)) throw GraphError("internal: generated graph is not 3-connected");
        if (6 * static_cast<int>(rec.family.size()) > c.graph.vertex_count() - 8)
          throw GraphError("internal: family exceeds the (n-8)/6 bound");
        rec.graph = std::move(c.graph);
        rec.embedding = std::move(c.embedding);
        rec.canonical = std::move(c.canonical);
        rec.parent_site = c.site;
        rec.parent_canonical = parent.canonical;
        rec.is_brace = rec.family.empty();
        levels[rec.vertex_count()].push_back(std::move(rec));
      }
    for (auto& rec : level) {
      if (options.on_record) options.on_record(rec);
      out.push_back(std::move(rec));
    }
    levels.erase(n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Auditing

struct RecordReport {
  bool ok = true;
  std::vector<std::string> failures;
  int family_size = 0;
  int scratch_cut_count = 0;   // all non-trivial tight cuts
  int scratch_laminar_size = 0;
  bool all_cuts_laminar = true;

  void fail(std::string why) {
    ok = false;
    failures.push_back(std::move(why));
  }
};

/// Re-derives the tight cut family from scratch and checks the record against it, along
/// with class membership and the family bound.
inline RecordReport verify_record(const GenerationRecord& rec) {
  RecordReport r;
  const auto& g = rec.graph;
  const int n = g.vertex_count();
  if (!g.is_cubic()) r.fail("not cubic");
  if (!two_colour(g)) r.fail("not bipartite");
  if (!is_k_connected(g, 3)) r.fail("not 3-connected");
  if (!rec.embedding.satisfies_euler(g)) r.fail("stored rotation fails the Euler check");
  if (!embed_planar(g)) r.fail("not planar");
  if (canonical_form(g) != rec.canonical) r.fail("stored canonical form is stale");
  if (!r.ok) return r;

  r.family_size = static_cast<int>(rec.family.size());
  if (6 * r.family_size > n - 8) r.fail("family exceeds the (n-8)/6 bound");
  if (rec.is_brace != rec.family.empty()) r.fail("is_brace flag disagrees with the family");

  const auto scratch = find_tight_cuts_cubic(g);
  r.scratch_cut_count = static_cast<int>(scratch.size());
  r.all_cuts_laminar = is_laminar_family(scratch);
  r.scratch_laminar_size = static_cast<int>(maximal_laminar_subfamily(scratch).size());
  std::set<std::vector<EdgeId>> scratch_ids;
  for (const auto& c : scratch) scratch_ids.insert(c.edge_ids);

  std::vector<Cut> fam;
  for (const auto& lc : rec.family.cuts) {
    fam.push_back(lc.cut);
    if (boundary(g, lc.cut.shore) != lc.cut.edge_ids) r.fail("cut " + std::to_string(lc.label) + " has stale edges");
    if (!scratch_ids.count(lc.cut.edge_ids))
      r.fail("cut " + std::to_string(lc.label) + " is not a non-trivial tight cut");
    if (colour_imbalance(g, lc.cut.shore) != 1) r.fail("cut " + std::to_string(lc.label) + " shore is not A-heavy");
  }
  if (!is_laminar_family(fam)) r.fail("family is not laminar");
  if (r.all_cuts_laminar) {
    std::set<std::vector<EdgeId>> fam_ids;
    for (const auto& c : fam) fam_ids.insert(c.edge_ids);
    if (fam_ids != scratch_ids) r.fail("family differs from the full (laminar) set of tight cuts");
  } else {
    if (r.family_size != r.scratch_laminar_size) r.fail("family size differs from a maximal laminar family");
    for (const auto& c : scratch) {
      bool member = std::any_of(fam.begin(), fam.end(), [&](const Cut& f) { return f.edge_ids == c.edge_ids; });
      bool compatible =
          std::all_of(fam.begin(), fam.end(), [&](const Cut& f) { return laminar(f.shore, c.shore); });
      if (!member && compatible) r.fail("family is not maximal");
    }
  }
  const bool brace = is_brace(g);
  if (brace != rec.family.empty()) r.fail("is_brace disagrees with an empty family");
  if (is_cyclically_4_connected(g) != brace) r.fail("cyclic 4-connectivity disagrees with is_brace");
  return r;
}

struct SurveyRow {
  int n = 0;
  int graphs = 0;
  int braces = 0;
  int non_hamiltonian = 0;
  int p2_checked = 0, p2_failures = 0;
  int hpm_checked = 0, hpm_failures = 0;
};

struct SurveyOptions {
  int p2_bound = 0;   // run P2 on graphs with at most this many vertices
  int hpm_bound = 0;  // run H+- likewise
  int jobs = 1;
};

/// Per-order counts of graphs and braces, with Hamiltonicity confirmed for every graph.
inline std::vector<SurveyRow> survey(int n_max, const SurveyOptions& options = {}) {
  std::map<int, SurveyRow> rows;
  for (int n = 8; n <= n_max; n += 2) rows[n].n = n;
  GenerateOptions go;
  go.jobs = options.jobs;
  go.on_record = [&](const GenerationRecord& rec) {
    auto& row = rows[rec.vertex_count()];
    ++row.graphs;
    row.braces += rec.is_brace;
    if (!is_hamiltonian(rec.graph)) ++row.non_hamiltonian;
    if (rec.vertex_count() <= options.p2_bound) {
      ++row.p2_checked;
      if (!is_pk_hamiltonian(rec.graph, 2).holds) ++row.p2_failures;
    }
    if (rec.vertex_count() <= options.hpm_bound) {
      ++row.hpm_checked;
      if (!has_h_plus_minus(rec.graph).holds) ++row.hpm_failures;
    }
  };
  generate(n_max, go);
  std::vector<SurveyRow> out;
  for (auto& [n, row] : rows) out.push_back(row);
  return out;
}

}  // namespace barnette
