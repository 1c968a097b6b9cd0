// Thin layer over the C++ core. Structured results cross the boundary as JSON
// text and are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "pisg/error.hpp"
#include "pisg/family.hpp"
#include "pisg/io.hpp"
#include "pisg/patterns.hpp"
#include "pisg/pis.hpp"
#include "pisg/surface.hpp"
#include "pisg/verify.hpp"

namespace py = pybind11;
using namespace pisg;

namespace {

RingSpec ring(const std::string& spec_json) { return ring_spec_from_json(json::parse(spec_json)); }

Graph graph_from(int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }

std::string build(const std::string& spec) {
  const RingSpec r = ring(spec);
  const LabeledGraph lg = build_pis(r);
  json edges = json::array();
  for (auto [u, v] : lg.graph.edges()) edges.push_back({u, v});
  return json{{"key", canonical_key(r)}, {"vertices", lg.labels}, {"edges", edges}, {"stats", to_json(graph_stats(lg.graph))}}.dump();
}

std::string classify_ring(const std::string& spec) { return to_json(classify(ring(spec))).dump(); }

std::string invariants(const std::string& spec, std::uint64_t budget) {
  const LabeledGraph lg = build_pis(ring(spec));
  return to_json(compute_invariants(lg.graph, budget, budget), &lg.labels).dump();
}

std::string surface(int n, const std::vector<std::pair<int, int>>& edges, bool crosscap, std::uint64_t budget) {
  const Graph g = graph_from(n, edges);
  const SurfaceOptions opts{budget, std::nullopt};
  auto c = crosscap ? crosscap_of(g, opts) : genus_of_components(g, opts);
  json j = to_json(c);
  j["checked"] = check_certificate(g, c);
  return j.dump();
}

std::string find(const std::string& spec, const std::string& pattern, const std::vector<std::string>& hints, std::uint64_t budget) {
  const LabeledGraph lg = build_pis(ring(spec));
  if (auto ip = parse_induced_pattern(pattern)) {
    auto w = find_induced(lg.graph, *ip);
    json j{{"pattern", to_string(*ip)}, {"status", w ? "found" : "absent"}};
    if (w) j["witness"] = to_json(*w, &lg.labels);
    return j.dump();
  }
  const auto pat = parse_subdivision_pattern(pattern);
  SubdivisionOptions opts;
  opts.budget = budget;
  for (const auto& h : hints) {
    auto v = lg.find(h);
    if (!v) throw Error(ErrorKind::BadInput, "unknown hint vertex '" + h + "'");
    opts.hints.push_back(*v);
  }
  auto r = find_subdivision(lg.graph, pat, opts);
  json j{{"pattern", pat.name}, {"status", to_string(r.status)}, {"nodes", r.nodes}};
  if (r.witness) {
    j["witness"] = to_json(*r.witness, &lg.labels);
    j["checked"] = check_subdivision_witness(lg.graph, pat, *r.witness);
  }
  return j.dump();
}

std::string verify_family(const std::string& config) { return to_json(verify(config_from_json(json::parse(config)))).dump(); }

std::pair<int, int> euler_bounds(int n, const std::vector<std::pair<int, int>>& edges) {
  auto b = euler_lower_bounds(graph_from(n, edges));
  return {b.genus_lb, b.crosscap_lb};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "prime ideal sum graph workbench";

  static py::exception<Error> exc(m, "PisgError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    } catch (const json::exception& e) {
      py::set_error(exc, e.what());
    }
  });

  m.def("build", &build, py::arg("spec"));
  m.def("classify", &classify_ring, py::arg("spec"));
  m.def("invariants", &invariants, py::arg("spec"), py::arg("budget") = 20'000'000);
  m.def("surface", &surface, py::arg("n"), py::arg("edges"), py::arg("crosscap"), py::arg("budget") = 20'000'000,
        py::call_guard<py::gil_scoped_release>());
  m.def("find", &find, py::arg("spec"), py::arg("pattern"), py::arg("hints") = std::vector<std::string>{},
        py::arg("budget") = 20'000'000);
  m.def("verify", &verify_family, py::arg("config"), py::call_guard<py::gil_scoped_release>());
  m.def("euler_lower_bounds", &euler_bounds, py::arg("n"), py::arg("edges"));
  m.def("formula_genus_complete", &formula_genus_complete);
  m.def("formula_genus_bipartite", &formula_genus_bipartite);
  m.def("formula_crosscap_complete", &formula_crosscap_complete);
  m.def("formula_crosscap_bipartite", &formula_crosscap_bipartite);
}
