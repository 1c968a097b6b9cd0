#include "pisg/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>

#include "pisg/error.hpp"

namespace pisg {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::BadInput, std::string("missing key '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorKind::BadInput, std::string("key '") + key + "' must be an integer");
  return v.get<int>();
}

IdealLattice factor_from_json(const json& f) {
  const auto& fam = field(f, "family");
  if (!fam.is_string()) throw Error(ErrorKind::BadInput, "'family' must be a string");
  const auto name = fam.get<std::string>();
  if (name == "field") return make_field();
  if (name == "chain") return make_chain(int_field(f, "k"));
  if (name == "twogen_xy") return make_twogen_xy(int_field(f, "q"));
  if (name == "twogen_flat") return make_twogen_flat(int_field(f, "q"));
  if (name == "custom") {
    RawLattice raw;
    raw.name = f.contains("name") && f["name"].is_string() ? f["name"].get<std::string>() : "custom";
    try {
      raw.elements = field(f, "elements").get<std::vector<std::string>>();
      raw.join = field(f, "join").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
      throw Error(ErrorKind::BadInput, std::string("custom lattice: ") + e.what());
    }
    const auto& mx = field(f, "maximal");
    if (mx.is_string()) {
      auto it = std::find(raw.elements.begin(), raw.elements.end(), mx.get<std::string>());
      if (it == raw.elements.end()) throw Error(ErrorKind::BadIndex, "maximal label '" + mx.get<std::string>() + "' is not an element");
      raw.maximal = static_cast<int>(it - raw.elements.begin());
    } else if (mx.is_number_integer()) {
      raw.maximal = mx.get<int>();
    } else {
      throw Error(ErrorKind::BadInput, "'maximal' must be a label or an index");
    }
    return validate_lattice(raw);
  }
  throw Error(ErrorKind::BadInput, "unknown family '" + name + "'");
}

json factor_to_json(const IdealLattice& L) {
  static const std::regex param(R"((chain|twogen_xy|twogen_flat)\((\d+)\))");
  std::smatch m;
  const std::string& name = L.name();
  if (name == "F" && L.is_field()) return {{"family", "field"}};
  if (std::regex_match(name, m, param)) {
    const int p = std::stoi(m[2]);
    const std::string fam = m[1];
    IdealLattice ref = fam == "chain" ? make_chain(p) : fam == "twogen_xy" ? make_twogen_xy(p) : make_twogen_flat(p);
    if (ref.labels() == L.labels() && lattice_key(ref) == lattice_key(L)) return {{"family", fam}, {fam == "chain" ? "k" : "q", p}};
  }
  json join = json::array();
  for (int a = 0; a <= L.top(); ++a) {
    json row = json::array();
    for (int b = 0; b <= L.top(); ++b) row.push_back(L.join(a, b));
    join.push_back(row);
  }
  return {{"family", "custom"}, {"name", name}, {"elements", L.labels()}, {"join", join}, {"maximal", L.label(L.maximal())}};
}

}  // namespace

RingSpec ring_spec_from_json(const json& j) {
  const auto& fs = field(j, "factors");
  if (!fs.is_array()) throw Error(ErrorKind::BadInput, "'factors' must be an array");
  std::vector<IdealLattice> factors;
  for (const auto& f : fs) factors.push_back(factor_from_json(f));
  return product_ring(std::move(factors));
}

json ring_spec_to_json(const RingSpec& ring) {
  json fs = json::array();
  for (const auto& f : ring.factors()) fs.push_back(factor_to_json(f));
  return {{"factors", fs}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::BadInput, path + ": " + e.what());
  }
}

RingSpec load_ring_spec(const std::string& path) { return ring_spec_from_json(read_json_file(path)); }

json to_json(const PredictedProfile& p) {
  json j;
  j["split"] = to_string(p.split);
  j["threshold"] = to_string(p.threshold);
  j["cograph"] = to_string(p.cograph);
  j["cactus"] = to_string(p.cactus);
  j["unicyclic"] = to_string(p.unicyclic);
  j["planar"] = to_string(p.planar);
  j["outerplanar"] = to_string(p.outerplanar);
  j["genus_class"] = to_string(p.genus_class);
  j["crosscap_class"] = to_string(p.crosscap_class);
  j["citations"] = json::object();
  for (const auto& [k, v] : p.citations) j["citations"][k] = v;
  j["notes"] = p.notes;
  return j;
}

PredictedProfile profile_from_json(const json& j) {
  PredictedProfile p;
  try {
    p.split = parse_tri(j.at("split").get<std::string>());
    p.threshold = parse_tri(j.at("threshold").get<std::string>());
    p.cograph = parse_tri(j.at("cograph").get<std::string>());
    p.cactus = parse_tri(j.at("cactus").get<std::string>());
    p.unicyclic = parse_tri(j.at("unicyclic").get<std::string>());
    p.planar = parse_tri(j.at("planar").get<std::string>());
    p.outerplanar = parse_tri(j.at("outerplanar").get<std::string>());
    p.genus_class = parse_genus_class(j.at("genus_class").get<std::string>());
    p.crosscap_class = parse_crosscap_class(j.at("crosscap_class").get<std::string>());
    for (const auto& [k, v] : j.at("citations").items()) p.citations[k] = v.get<std::vector<std::string>>();
    p.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("profile: ") + e.what());
  }
  return p;
}

json to_json(const PatternWitness& w, const std::vector<std::string>* labels) {
  json j;
  j["kind"] = w.kind == WitnessKind::Induced ? "induced" : "subdivision";
  j["pattern"] = w.pattern;
  j["vertex_map"] = w.vertex_map;
  if (labels) {
    json names = json::array();
    for (int v : w.vertex_map) names.push_back(labels->at(static_cast<std::size_t>(v)));
    j["vertex_labels"] = names;
  }
  json pe = json::array();
  for (auto [a, b] : w.pattern_edges) pe.push_back({a, b});
  j["pattern_edges"] = pe;
  j["paths"] = w.paths;
  return j;
}

PatternWitness witness_from_json(const json& j) {
  PatternWitness w;
  try {
    w.kind = j.at("kind").get<std::string>() == "induced" ? WitnessKind::Induced : WitnessKind::Subdivision;
    w.pattern = j.at("pattern").get<std::string>();
    w.vertex_map = j.at("vertex_map").get<std::vector<int>>();
    for (const auto& e : j.at("pattern_edges")) w.pattern_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    w.paths = j.at("paths").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("witness: ") + e.what());
  }
  return w;
}

json to_json(const SignedRotationSystem& s) {
  json j;
  j["rotation"] = s.rotation;
  json neg = json::array();
  for (const auto& [e, v] : s.signs)
    if (v < 0) neg.push_back({e.first, e.second});
  j["twisted_edges"] = neg;
  return j;
}

SignedRotationSystem rotation_from_json(const json& j) {
  SignedRotationSystem s;
  try {
    s.rotation = j.at("rotation").get<std::vector<std::vector<int>>>();
    for (const auto& e : j.at("twisted_edges")) {
      int a = e.at(0).get<int>(), b = e.at(1).get<int>();
      s.signs[{std::min(a, b), std::max(a, b)}] = -1;
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("rotation: ") + e.what());
  }
  return s;
}

json to_json(const SurfaceCertificate& c) {
  json j;
  j["measure"] = to_string(c.measure);
  j["kind"] = to_string(c.kind);
  j["status"] = to_string(c.status);
  j["lower"] = c.lower;
  j["upper"] = c.upper;
  if (c.exact()) j["value"] = c.lower;
  else j["value"] = nullptr;
  j["nodes"] = c.nodes;
  if (c.euler) j["euler"] = {{"v", c.euler->v}, {"e", c.euler->e}, {"girth", c.euler->girth}};
  if (c.embedding) j["embedding"] = to_json(*c.embedding);
  if (c.subdivision) j["subdivision"] = to_json(*c.subdivision);
  if (!c.blocks.empty()) {
    json bl = json::array();
    for (const auto& b : c.blocks) {
      json e{{"vertices", b.vertices},
             {"genus", {b.genus_lower, b.genus_upper}},
             {"crosscap", {b.crosscap_lower, b.crosscap_upper}}};
      if (b.mu) e["mu"] = *b.mu;
      else e["mu"] = nullptr;
      bl.push_back(e);
    }
    j["blocks"] = bl;
  }
  return j;
}

SurfaceCertificate certificate_from_json(const json& j) {
  SurfaceCertificate c;
  try {
    const auto measure = j.at("measure").get<std::string>();
    c.measure = measure == "genus" ? Measure::Genus : Measure::Crosscap;
    const auto kind = j.at("kind").get<std::string>();
    for (auto k : {CertificateKind::Embedding, CertificateKind::EulerBound, CertificateKind::SubdivisionBound, CertificateKind::BlockComposition})
      if (kind == to_string(k)) c.kind = k;
    const auto status = j.at("status").get<std::string>();
    for (auto s : {SearchStatus::Found, SearchStatus::Absent, SearchStatus::BudgetExhausted})
      if (status == to_string(s)) c.status = s;
    c.lower = j.at("lower").get<int>();
    c.upper = j.at("upper").get<int>();
    c.nodes = j.at("nodes").get<std::uint64_t>();
    if (j.contains("euler")) {
      const auto& e = j["euler"];
      c.euler = EulerWitness{e.at("v").get<int>(), e.at("e").get<int>(), e.at("girth").get<int>()};
    }
    if (j.contains("embedding")) c.embedding = rotation_from_json(j["embedding"]);
    if (j.contains("subdivision")) c.subdivision = witness_from_json(j["subdivision"]);
    if (j.contains("blocks"))
      for (const auto& b : j["blocks"]) {
        BlockEntry e;
        e.vertices = b.at("vertices").get<std::vector<int>>();
        e.genus_lower = b.at("genus").at(0).get<int>();
        e.genus_upper = b.at("genus").at(1).get<int>();
        e.crosscap_lower = b.at("crosscap").at(0).get<int>();
        e.crosscap_upper = b.at("crosscap").at(1).get<int>();
        if (!b.at("mu").is_null()) e.mu = b["mu"].get<int>();
        c.blocks.push_back(std::move(e));
      }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("certificate: ") + e.what());
  }
  return c;
}

json to_json(const GraphStats& s) {
  json j;
  j["v"] = s.v;
  j["e"] = s.e;
  j["degree_sequence"] = s.degree_sequence;
  if (s.girth) j["girth"] = *s.girth;
  else j["girth"] = nullptr;
  j["components"] = s.components;
  return j;
}

}  // namespace pisg
