#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "barnette/catalog.hpp"
#include "barnette/constructions.hpp"
#include "barnette/generator.hpp"
#include "barnette/hamiltonicity.hpp"
#include "barnette/tightcut.hpp"

namespace barnette {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

inline Json cycle_json(const HamiltonianCycle& h) {
  return Json{{"vertices", h.vertex_sequence}, {"edges", h.edge_ids}};
}

/// hamiltonian, p2..p_max_k, h_minus, h_plus_minus plus one witness or counterexample each.
inline Json property_report(const BipartiteGraph& g, int max_k = 5) {
  Json out{{"schema", kReportSchema}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  Json witnesses = Json::object(), counterexamples = Json::object();
  auto h = find_hamiltonian_cycle(g);
  out["hamiltonian"] = h.has_value();
  if (h) witnesses["hamiltonian"] = cycle_json(*h);
  for (int k = 2; k <= max_k; ++k) {
    const std::string key = "p" + std::to_string(k);
    if (g.vertex_count() < k) continue;
    auto r = is_pk_hamiltonian(g, k);
    out[key] = r.holds;
    if (!r.holds && !r.counterexample_path.empty()) counterexamples[key] = {{"path", r.counterexample_path}};
  }
  auto hm = has_h_minus(g);
  out["h_minus"] = hm.holds;
  if (!hm.holds && !hm.counterexample_edges.empty()) counterexamples["h_minus"] = {{"edge", hm.counterexample_edges[0]}};
  auto hpm = has_h_plus_minus(g);
  out["h_plus_minus"] = hpm.holds;
  if (!hpm.holds && hpm.counterexample_edges.size() == 2)
    counterexamples["h_plus_minus"] = {{"contains", hpm.counterexample_edges[0]}, {"avoids", hpm.counterexample_edges[1]}};
  out["witnesses"] = witnesses;
  out["counterexamples"] = counterexamples;
  return out;
}

/// Distinct braces in `braces`, the multiplicities, and the contraction trace.
inline Json decomposition_report(const Decomposition& d) {
  std::map<std::string, int> count;
  for (const auto& b : d.braces) ++count[b];
  Json distinct = Json::array(), multiset = Json::array(), trace = Json::array();
  for (const auto& [form, c] : count) {
    distinct.push_back(form);
    multiset.push_back({{"graph6", form}, {"count", c}});
  }
  for (const auto& s : d.trace)
    trace.push_back({{"graph_vertices", s.graph_vertices}, {"cut_edges", s.cut_edges}, {"shore_size", s.shore_size}});
  return Json{{"schema", kReportSchema}, {"braces", distinct}, {"multiset", multiset}, {"trace", trace}};
}

inline Json k33_json(const K33Bisubdivision& h) {
  return Json{{"a", h.a}, {"b", h.b}, {"paths", h.paths}, {"edges", h.edges}};
}

/// Pfaffian status with an orientation witness, or a conformal K3,3 bisubdivision.
inline Json pfaffian_report(const BipartiteGraph& g) {
  auto r = find_pfaffian_orientation(g);
  Json out{{"schema", kReportSchema}, {"pfaffian", r.orientation.has_value()},
           {"conformal_cycles", r.conformal_cycles}, {"saturated", r.saturated}};
  if (r.orientation) {
    std::vector<int> bits;
    for (bool b : r.orientation->forward) bits.push_back(b ? 1 : 0);
    out["witness"] = {{"orientation", bits}};
  } else if (auto k = find_conformal_k33_bisubdivision(g)) {
    out["witness"] = {{"k33_bisubdivision", k33_json(*k)}};
  } else {
    out["witness"] = nullptr;
    out["inconsistent"] = true;
  }
  return out;
}

inline Json record_report_json(const RecordReport& r) {
  return Json{{"ok", r.ok},
              {"family_size", r.family_size},
              {"scratch_cut_count", r.scratch_cut_count},
              {"scratch_laminar_size", r.scratch_laminar_size},
              {"all_cuts_laminar", r.all_cuts_laminar},
              {"failures", r.failures}};
}

inline Json survey_json(const std::vector<SurveyRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back({{"n", r.n},
                   {"graphs", r.graphs},
                   {"braces", r.braces},
                   {"non_hamiltonian", r.non_hamiltonian},
                   {"p2_checked", r.p2_checked},
                   {"p2_failures", r.p2_failures},
                   {"h_plus_minus_checked", r.hpm_checked},
                   {"h_plus_minus_failures", r.hpm_failures}});
  return Json{{"schema", kReportSchema}, {"rows", arr}};
}

inline Json transfer_json(const TransferReport& r) {
  auto profile = [](const PropertyProfile& p) {
    return Json{{"h_minus", p.h_minus}, {"p3", p.p3}, {"h_plus_minus", p.h_plus_minus}, {"p4", p.p4}};
  };
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}, {"asserted", c.asserted}});
  return Json{{"schema", kReportSchema},
              {"graph", profile(r.graph)},
              {"shore_side", profile(r.shore_side)},
              {"other_side", profile(r.other_side)},
              {"checks", checks},
              {"ok", r.ok()}};
}

/// Expected-property table of a catalog entry evaluated against the engines.
inline Json catalog_check_json(const CatalogEntry& e, bool* all_ok = nullptr) {
  Json props = Json::object();
  bool ok = true;
  for (const auto& [name, expected] : e.expected_properties) {
    bool got = evaluate_property(name, e.graph);
    props[name] = {{"expected", expected}, {"actual", got}};
    ok = ok && got == expected;
  }
  if (all_ok) *all_ok = ok;
  return Json{{"schema", kReportSchema},
              {"name", e.name},
              {"description", e.description},
              {"vertices", e.graph.vertex_count()},
              {"edges", e.graph.edge_count()},
              {"properties", props},
              {"ok", ok}};
}

}  // namespace barnette
