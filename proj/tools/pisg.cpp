#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pisg/classifier.hpp"
#include "pisg/error.hpp"
#include "pisg/family.hpp"
#include "pisg/io.hpp"
#include "pisg/ledger.hpp"
#include "pisg/patterns.hpp"
#include "pisg/pis.hpp"
#include "pisg/surface.hpp"
#include "pisg/verify.hpp"

using namespace pisg;

namespace {

enum Exit { kOk = 0, kFailures = 1, kBadInput = 2, kBudget = 3 };

// A ring argument is either a path to a ring-spec file or inline JSON.
RingSpec load_ring(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    json j;
    try {
      j = json::parse(arg);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::BadInput, std::string("inline ring spec: ") + e.what());
    }
    return ring_spec_from_json(j);
  }
  return load_ring_spec(arg);
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// Splits on commas that are not inside parentheses, so tuple labels such as
// "(F,0,M)" survive.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<int> resolve_hints(const LabeledGraph& lg, const std::string& raw) {
  std::vector<int> out;
  for (const auto& tok : split_top_level(raw)) {
    if (auto v = lg.find(tok)) {
      out.push_back(*v);
      continue;
    }
    const bool numeric = !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!numeric) throw Error(ErrorKind::BadInput, "unknown hint vertex '" + tok + "'");
    const int v = std::stoi(tok);
    if (v >= lg.graph.vertex_count()) throw Error(ErrorKind::BadInput, "hint vertex " + tok + " out of range");
    out.push_back(v);
  }
  return out;
}

json build_json(const RingSpec& ring, const LabeledGraph& lg) {
  json j;
  j["key"] = canonical_key(ring);
  j["ring"] = ring_spec_to_json(ring);
  j["stats"] = to_json(graph_stats(lg.graph));
  j["vertices"] = lg.labels;
  json edges = json::array();
  for (auto [u, v] : lg.graph.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  return j;
}

std::string yes_no(const std::optional<bool>& b) { return !b ? "unknown" : *b ? "yes" : "no"; }

// Shared by `genus` and `crosscap`.
struct SurfaceArgs {
  std::string spec;
  std::string graph_path;
  std::uint64_t budget = 20'000'000;
  bool as_json = false;
};

LabeledGraph surface_input(const SurfaceArgs& a) {
  if (a.spec.empty() == a.graph_path.empty()) throw Error(ErrorKind::BadInput, "give exactly one of <spec> or --graph");
  if (!a.graph_path.empty()) return unlabeled(read_edge_list_file(a.graph_path));
  return build_pis(load_ring(a.spec));
}

int report_surface(const char* what, const SurfaceCertificate& c, const LabeledGraph& lg, bool as_json) {
  std::string why;
  const bool checked = check_certificate(lg.graph, c, &why);
  if (as_json) {
    json j = to_json(c);
    j["checked"] = checked;
    if (!checked) j["check_error"] = why;
    print(j);
  } else if (c.exact()) {
    std::cout << what << " " << c.lower << " (" << to_string(c.kind) << ", " << c.nodes << " nodes, certificate "
              << (checked ? "ok" : "REJECTED: " + why) << ")\n";
  } else {
    std::cout << what << " in [" << c.lower << ", " << (c.upper < 0 ? std::string("?") : std::to_string(c.upper)) << "] ("
              << to_string(c.status) << ", " << c.nodes << " nodes)\n";
  }
  if (!checked) return kFailures;
  return c.exact() ? kOk : kBudget;
}

struct FormulaLine {
  std::string graph;
  const char* measure;
  int expected;
  SurfaceCertificate got;
};

int run_formulas(int max_n, int max_mn, std::uint64_t budget, bool as_json) {
  std::vector<FormulaLine> lines;
  const SurfaceOptions opts{budget, std::nullopt};
  for (int n = 3; n <= max_n; ++n) {
    const Graph g = complete_graph(n);
    lines.push_back({"K" + std::to_string(n), "genus", formula_genus_complete(n), genus_exact(g, opts)});
    lines.push_back({"K" + std::to_string(n), "crosscap", formula_crosscap_complete(n), crosscap_exact(g, opts)});
  }
  for (int m = 2; m <= max_mn; ++m)
    for (int n = m; n <= max_mn; ++n) {
      const Graph g = complete_bipartite(m, n);
      const std::string name = "K" + std::to_string(m) + "," + std::to_string(n);
      lines.push_back({name, "genus", formula_genus_bipartite(m, n), genus_exact(g, opts)});
      lines.push_back({name, "crosscap", formula_crosscap_bipartite(m, n), crosscap_exact(g, opts)});
    }
  int mismatches = 0, open = 0;
  json out = json::array();
  for (const auto& l : lines) {
    const bool inside = l.got.lower <= l.expected && (l.got.upper < 0 || l.expected <= l.got.upper);
    const char* verdict = !inside ? "mismatch" : l.got.exact() ? "match" : "interval";
    if (!inside) ++mismatches;
    else if (!l.got.exact()) ++open;
    if (as_json) {
      out.push_back({{"graph", l.graph}, {"measure", l.measure}, {"formula", l.expected}, {"lower", l.got.lower},
                     {"upper", l.got.upper}, {"nodes", l.got.nodes}, {"verdict", verdict}});
    } else {
      std::cout << l.graph << " " << l.measure << ": formula " << l.expected << ", search ";
      if (l.got.exact()) std::cout << l.got.lower;
      else std::cout << "[" << l.got.lower << ", " << l.got.upper << "]";
      std::cout << " -> " << verdict << " (" << l.got.nodes << " nodes)\n";
    }
  }
  if (as_json) print(out);
  if (mismatches) return kFailures;
  return open ? kBudget : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime ideal sum graph workbench"};
  app.require_subcommand(1);

  std::string spec, dot_path, graph_path, config_path, ledger_path, pattern, hints, report_path;
  bool as_json = false;
  std::uint64_t budget = 20'000'000;
  int max_n = 7, max_mn = 6;
  unsigned workers = 0;

  auto* build = app.add_subcommand("build", "build PIS(R) and print its statistics");
  build->add_option("spec", spec, "ring-spec file or inline JSON")->required();
  build->add_option("--dot", dot_path, "write a DOT rendering here");
  build->add_flag("--json", as_json, "full vertex/edge listing as JSON");

  auto* classify_cmd = app.add_subcommand("classify", "predict the structural profile from the ring shape");
  classify_cmd->add_option("spec", spec)->required();
  classify_cmd->add_flag("--json", as_json);

  auto* invariants = app.add_subcommand("invariants", "run the direct recognizers on PIS(R)");
  invariants->add_option("spec", spec)->required();
  invariants->add_option("--budget", budget);
  invariants->add_flag("--json", as_json);

  SurfaceArgs sargs;
  auto* genus = app.add_subcommand("genus", "orientable genus (summed over components)");
  auto* crosscap = app.add_subcommand("crosscap", "non-orientable genus of a connected graph");
  for (auto* sub : {genus, crosscap}) {
    sub->add_option("spec", sargs.spec, "ring-spec file or inline JSON");
    sub->add_option("--graph", sargs.graph_path, "edge-list file, one 'u v' per line");
    sub->add_option("--budget", sargs.budget, "search-node budget");
    sub->add_flag("--json", sargs.as_json);
  }

  auto* formulas = app.add_subcommand("formulas", "exact search against the closed forms for K(n) and K(m,n)");
  formulas->add_option("--max-n", max_n)->check(CLI::Range(3, 8));
  formulas->add_option("--max-mn", max_mn)->check(CLI::Range(2, 6));
  formulas->add_option("--budget", budget);
  formulas->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "predictions vs computation over a ring family");
  verify_cmd->add_option("--config", config_path)->required();
  verify_cmd->add_option("--ledger", ledger_path, "JSONL certificate store");
  verify_cmd->add_option("--report", report_path, "write the JSON report here");
  verify_cmd->add_option("--workers", workers, "overrides the config");
  verify_cmd->add_flag("--json", as_json, "print the JSON report instead of the table");

  auto* find = app.add_subcommand("find", "search PIS(R) for an induced pattern or a subdivision");
  find->add_option("spec", spec)->required();
  find->add_option("--pattern", pattern, "P4 C4 C5 2K2 K4 K23 K5 K33 K54 K55")->required();
  find->add_option("--hints", hints, "preferred branch vertices: labels or indices, comma separated");
  find->add_option("--budget", budget);
  find->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*build) {
      const RingSpec ring = load_ring(spec);
      const LabeledGraph lg = build_pis(ring);
      if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw Error(ErrorKind::BadInput, "cannot write " + dot_path);
        out << export_dot(lg);
      }
      if (as_json) {
        print(build_json(ring, lg));
      } else {
        const auto st = graph_stats(lg.graph);
        std::cout << canonical_key(ring) << "\nv = " << st.v << ", e = " << st.e << ", components = " << st.components
                  << ", girth = " << (st.girth ? std::to_string(*st.girth) : std::string("inf")) << "\n";
      }
      return kOk;
    }

    if (*classify_cmd) {
      const auto p = classify(load_ring(spec));
      if (as_json) {
        print(to_json(p));
      } else {
        std::cout << "split " << to_string(p.split) << "\nthreshold " << to_string(p.threshold) << "\ncograph "
                  << to_string(p.cograph) << "\ncactus " << to_string(p.cactus) << "\nunicyclic " << to_string(p.unicyclic)
                  << "\nplanar " << to_string(p.planar) << "\nouterplanar " << to_string(p.outerplanar) << "\ngenus "
                  << to_string(p.genus_class) << "\ncrosscap " << to_string(p.crosscap_class) << "\n";
      }
      return kOk;
    }

    if (*invariants) {
      const LabeledGraph lg = build_pis(load_ring(spec));
      const auto c = compute_invariants(lg.graph, budget, budget);
      if (as_json) {
        print(to_json(c, &lg.labels));
      } else {
        std::cout << "split " << yes_no(c.split) << "\nthreshold " << yes_no(c.threshold) << "\ncograph " << yes_no(c.cograph)
                  << "\ncactus " << yes_no(c.cactus) << "\nunicyclic " << yes_no(c.unicyclic) << "\nplanar "
                  << yes_no(c.planar) << "\nouterplanar " << yes_no(c.outerplanar) << "\n";
        for (const auto& s : c.crosschecks) std::cout << "crosscheck: " << s << "\n";
      }
      const bool undecided = !c.planar || !c.outerplanar;
      return undecided ? kBudget : kOk;
    }

    if (*genus) {
      const LabeledGraph lg = surface_input(sargs);
      return report_surface("genus", genus_of_components(lg.graph, SurfaceOptions{sargs.budget, std::nullopt}), lg, sargs.as_json);
    }

    if (*crosscap) {
      const LabeledGraph lg = surface_input(sargs);
      return report_surface("crosscap", crosscap_of(lg.graph, SurfaceOptions{sargs.budget, std::nullopt}), lg, sargs.as_json);
    }

    if (*formulas) return run_formulas(max_n, max_mn, budget, as_json);

    if (*verify_cmd) {
      FamilyConfig cfg = config_from_json(read_json_file(config_path));
      if (workers) cfg.workers = workers;
      std::optional<Ledger> ledger;
      if (!ledger_path.empty()) ledger.emplace(ledger_path);
      const auto report = verify(cfg, ledger ? &*ledger : nullptr);
      for (const auto& e : report.ledger_problems) std::cerr << "ledger: " << e.what() << "\n";
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw Error(ErrorKind::BadInput, "cannot write " + report_path);
        out << to_json(report).dump(2) << "\n";
      }
      if (as_json) print(to_json(report));
      else std::cout << summary_table(report);
      return report.fail ? kFailures : kOk;
    }

    if (*find) {
      const LabeledGraph lg = build_pis(load_ring(spec));
      if (auto ip = parse_induced_pattern(pattern)) {
        auto w = find_induced(lg.graph, *ip);
        if (as_json) {
          json j{{"pattern", to_string(*ip)}, {"found", w.has_value()}};
          if (w) j["witness"] = to_json(*w, &lg.labels);
          print(j);
        } else if (w) {
          std::cout << "induced " << to_string(*ip) << ":";
          for (int v : w->vertex_map) std::cout << " " << lg.labels[static_cast<std::size_t>(v)];
          std::cout << "\n";
        } else {
          std::cout << "no induced " << to_string(*ip) << "\n";
        }
        return kOk;
      }
      const auto pat = parse_subdivision_pattern(pattern);
      SubdivisionOptions opts;
      opts.budget = budget;
      if (!hints.empty()) opts.hints = resolve_hints(lg, hints);
      const auto r = find_subdivision(lg.graph, pat, opts);
      std::string why;
      const bool checked = !r.witness || check_subdivision_witness(lg.graph, pat, *r.witness, &why);
      if (as_json) {
        json j{{"pattern", pat.name}, {"status", to_string(r.status)}, {"nodes", r.nodes}};
        if (r.witness) {
          j["witness"] = to_json(*r.witness, &lg.labels);
          j["checked"] = checked;
        }
        print(j);
      } else if (r.witness) {
        std::cout << pat.name << " subdivision, branch vertices:";
        for (int v : r.witness->vertex_map) std::cout << " " << lg.labels[static_cast<std::size_t>(v)];
        std::cout << "\n" << r.witness->paths.size() << " paths, checker " << (checked ? "ok" : "REJECTED: " + why) << "\n";
      } else {
        std::cout << pat.name << ": " << to_string(r.status) << " after " << r.nodes << " nodes\n";
      }
      if (!checked) return kFailures;
      return r.status == SearchStatus::BudgetExhausted ? kBudget : kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& d : e.details()) std::cerr << "  " << d << "\n";
    return kBadInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
