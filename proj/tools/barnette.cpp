// barnette: command-line front end for the cubic planar bipartite toolkit.
//
// Exit codes: 0 success, 1 a property check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "barnette/catalog.hpp"
#include "barnette/constructions.hpp"
#include "barnette/generator.hpp"
#include "barnette/io.hpp"
#include "report.hpp"

namespace {

using namespace barnette;

constexpr int kOk = 0, kPropertyFailure = 1, kUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::vector<BipartiteGraph> read_input(const std::string& path) {
  std::istringstream is(slurp(path));
  auto graphs = read_graphs(is);
  if (graphs.empty()) throw InputError("no graphs in input");
  return graphs;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Rebuilds a generation record from a bgf record carrying rotation and cut lines.
GenerationRecord record_from_bgf(const BgfRecord& rec) {
  GenerationRecord r;
  r.graph = coloured(rec.graph);
  if (rec.rotation.empty()) throw InputError("verify needs rotation lines (generate writes them)");
  r.embedding = RotationEmbedding(r.graph, rec.rotation);
  for (const auto& [label, ids] : rec.cuts) {
    VertexSet removed = r.graph.empty_edge_set();
    for (EdgeId e : ids) {
      if (e < 0 || e >= r.graph.edge_count()) throw InputError("cut edge id out of range");
      removed.set(e);
    }
    std::vector<int> comp;
    if (components(r.graph, r.graph.empty_vertex_set(), removed, comp) != 2)
      throw InputError("cut " + std::to_string(label) + " does not split the graph in two");
    VertexSet shore = r.graph.empty_vertex_set();
    for (Vertex v = 0; v < r.graph.vertex_count(); ++v)
      if (comp[v] == 0) shore.set(v);
    r.family.cuts.push_back({label, make_cut(r.graph, orient_shore(r.graph, shore))});
    r.family.next_label = std::max(r.family.next_label, label + 1);
  }
  r.canonical = canonical_form(r.graph);
  r.is_brace = r.family.empty();
  return r;
}

BgfRecord to_bgf_record(const GenerationRecord& rec, bool with_family) {
  BgfRecord b{rec.graph, rec.embedding.rotation(), {}};
  if (with_family)
    for (const auto& lc : rec.family.cuts) b.cuts.emplace_back(lc.label, lc.cut.edge_ids);
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for cubic 3-connected planar bipartite graphs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON reports");

  // generate
  auto* gen = app.add_subcommand("generate", "Generate the class up to a vertex bound");
  int max_n = 0, jobs = 1;
  bool braces_only = false, with_family = false;
  std::string format = "bgf", out_path;
  gen->add_option("--max-n", max_n, "Largest vertex count (even, >= 8)")->required();
  gen->add_flag("--braces-only", braces_only, "Emit only graphs with an empty tight cut family");
  gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"bgf", "graph6"}));
  gen->add_flag("--with-family", with_family, "Append the tight cut family to bgf records");
  gen->add_option("--out", out_path, "Output file (default stdout)");
  gen->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  gen->add_flag("--json", json, "Print a per-order summary as JSON");

  // decompose
  auto* dec = app.add_subcommand("decompose", "Tight cut decomposition into braces");
  std::string dec_in;
  bool multiset = false;
  dec->add_option("file", dec_in, "Input (bgf or graph6; default stdin)");
  dec->add_flag("--multiset", multiset, "One line per brace occurrence instead of distinct braces");
  dec->add_flag("--json", json, "JSON report");

  // check-properties
  auto* chk = app.add_subcommand("check-properties", "Hamiltonicity predicates");
  std::string chk_in;
  int max_k = 5;
  std::vector<std::string> expectations;
  chk->add_option("file", chk_in, "Input (default stdin)");
  chk->add_option("--max-k", max_k, "Largest k for P_k checks")->check(CLI::Range(2, 5));
  chk->add_option("--expect", expectations, "Expected value, e.g. p4=true; failure exits with 1");
  chk->add_flag("--json", json, "JSON report");

  // pfaffian
  auto* pf = app.add_subcommand("pfaffian", "Pfaffian orientation or conformal K3,3 bisubdivision");
  std::string pf_in;
  pf->add_option("file", pf_in, "Input (default stdin)");
  pf->add_flag("--json", json, "JSON report");

  // catalog
  auto* cat = app.add_subcommand("catalog", "Named fixture graphs");
  std::string cat_name, cat_format = "bgf";
  bool cat_list = false, cat_check = false;
  cat->add_option("name", cat_name, "Entry name");
  cat->add_flag("--list", cat_list, "List entry names");
  cat->add_flag("--check", cat_check, "Evaluate the entry's expected properties");
  cat->add_option("--format", cat_format, "Output format")->check(CLI::IsMember({"bgf", "graph6"}));
  cat->add_flag("--json", json, "JSON output for --check");

  // verify
  auto* ver = app.add_subcommand("verify", "Audit generation output against from-scratch tight cuts");
  std::string ver_in;
  ver->add_option("file", ver_in, "bgf file written by generate --with-family")->required();
  ver->add_flag("--json", json, "JSON report");

  // survey
  auto* sur = app.add_subcommand("survey", "Per-order counts and Hamiltonicity confirmation");
  int sur_max = 0, p2_max = 0, hpm_max = 0;
  sur->add_option("--max-n", sur_max, "Largest vertex count")->required();
  sur->add_option("--p2-max", p2_max, "Check P2-Hamiltonicity up to this order");
  sur->add_option("--hpm-max", hpm_max, "Check the H+- property up to this order");
  sur->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sur->add_flag("--json", json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      std::unique_ptr<std::ofstream> file;
      if (!out_path.empty()) {
        file = std::make_unique<std::ofstream>(out_path);
        if (!*file) throw InputError("cannot write " + out_path);
      }
      std::ostream& os = file ? *file : std::cout;
      std::map<int, std::pair<int, int>> counts;
      GenerateOptions opts;
      opts.jobs = jobs;
      opts.on_record = [&](const GenerationRecord& rec) {
        auto& c = counts[rec.vertex_count()];
        ++c.first;
        c.second += rec.is_brace;
        if (braces_only && !rec.is_brace) return;
        if (json && !file) return;  // summary only
        if (format == "graph6") os << to_graph6(rec.graph) << '\n';
        else os << to_bgf(to_bgf_record(rec, with_family));
        os.flush();
      };
      generate(max_n, opts);
      if (json) {
        Json rows = Json::array();
        for (int n = 8; n <= max_n; n += 2)
          rows.push_back({{"n", n}, {"graphs", counts[n].first}, {"braces", counts[n].second}});
        print_json(Json{{"schema", kReportSchema}, {"rows", rows}});
      }
      return kOk;
    }

    if (*dec) {
      Json reports = Json::array();
      for (const auto& g : read_input(dec_in)) {
        auto d = tight_cut_decomposition(g);
        if (json) {
          reports.push_back(decomposition_report(d));
          continue;
        }
        auto lines = d.braces;
        if (!multiset) lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
        for (const auto& b : lines) std::cout << b << '\n';
      }
      if (json) print_json(reports.size() == 1 ? reports[0] : reports);
      return kOk;
    }

    if (*chk) {
      bool failed = false;
      Json reports = Json::array();
      for (const auto& g : read_input(chk_in)) {
        Json r = property_report(g, max_k);
        for (const auto& ex : expectations) {
          auto eq = ex.find('=');
          if (eq == std::string::npos) throw CLI::ValidationError("--expect", "expected NAME=true|false");
          const std::string key = ex.substr(0, eq), val = ex.substr(eq + 1);
          if (val != "true" && val != "false") throw CLI::ValidationError("--expect", "value must be true or false");
          if (!r.contains(key)) throw CLI::ValidationError("--expect", "unknown property " + key);
          if (r[key].get<bool>() != (val == "true")) failed = true;
        }
        reports.push_back(r);
      }
      if (json) {
        print_json(reports.size() == 1 ? reports[0] : reports);
      } else {
        for (const auto& r : reports) {
          for (const auto& key : {"hamiltonian", "p2", "p3", "p4", "p5", "h_minus", "h_plus_minus"})
            if (r.contains(key)) std::cout << key << ' ' << (r[key].get<bool>() ? "true" : "false") << '\n';
        }
      }
      return failed ? kPropertyFailure : kOk;
    }

    if (*pf) {
      Json reports = Json::array();
      for (const auto& g : read_input(pf_in)) reports.push_back(pfaffian_report(g));
      if (json) {
        print_json(reports.size() == 1 ? reports[0] : reports);
      } else {
        for (const auto& r : reports) std::cout << "pfaffian " << (r["pfaffian"].get<bool>() ? "true" : "false") << '\n';
      }
      bool inconsistent = false;
      for (const auto& r : reports) inconsistent = inconsistent || r.contains("inconsistent");
      return inconsistent ? kPropertyFailure : kOk;
    }

    if (*cat) {
      if (cat_list) {
        for (const auto& n : catalog_names()) std::cout << n << '\n';
        return kOk;
      }
      if (cat_name.empty()) throw CLI::ValidationError("name", "a catalog entry name is required");
      auto e = catalog(cat_name);
      if (cat_check) {
        bool ok = true;
        Json j = catalog_check_json(e, &ok);
        if (json) {
          print_json(j);
        } else {
          for (const auto& [k, v] : j["properties"].items())
            std::cout << k << " expected " << v["expected"] << " actual " << v["actual"] << '\n';
        }
        return ok ? kOk : kPropertyFailure;
      }
      if (cat_format == "graph6") std::cout << to_graph6(e.graph) << '\n';
      else std::cout << to_bgf(e.graph);
      return kOk;
    }

    if (*ver) {
      std::istringstream is(slurp(ver_in));
      auto records = read_bgf(is);
      bool ok = true;
      Json reports = Json::array();
      for (std::size_t i = 0; i < records.size(); ++i) {
        auto rep = verify_record(record_from_bgf(records[i]));
        ok = ok && rep.ok;
        if (json) reports.push_back(record_report_json(rep));
        else
          for (const auto& f : rep.failures) std::cout << "record " << i << ": " << f << '\n';
      }
      if (json) print_json(Json{{"schema", kReportSchema}, {"records", reports}, {"ok", ok}});
      else std::cout << records.size() << " records, " << (ok ? "all consistent" : "FAILURES") << '\n';
      return ok ? kOk : kPropertyFailure;
    }

    if (*sur) {
      SurveyOptions so;
      so.p2_bound = p2_max;
      so.hpm_bound = hpm_max;
      so.jobs = jobs;
      auto rows = survey(sur_max, so);
      bool ok = true;
      for (const auto& r : rows) ok = ok && r.non_hamiltonian == 0 && r.p2_failures == 0 && r.hpm_failures == 0;
      if (json) {
        print_json(survey_json(rows));
      } else {
        std::cout << "n\tgraphs\tbraces\tnon_ham\tp2_fail\thpm_fail\n";
        for (const auto& r : rows)
          std::cout << r.n << '\t' << r.graphs << '\t' << r.braces << '\t' << r.non_hamiltonian << '\t'
                    << r.p2_failures << '/' << r.p2_checked << '\t' << r.hpm_failures << '/' << r.hpm_checked << '\n';
      }
      return ok ? kOk : kPropertyFailure;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
