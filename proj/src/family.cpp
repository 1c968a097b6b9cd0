#include "pisg/family.hpp"

#include <regex>
#include <set>

#include "pisg/error.hpp"

namespace pisg {

std::string FactorTemplate::label() const {
  switch (family) {
    case Family::Field: return "F";
    case Family::Chain: return param == 0 ? "F" : "chain(" + std::to_string(param) + ")";
    case Family::TwoGenXY: return "twogen_xy(" + std::to_string(param) + ")";
    case Family::TwoGenFlat: return "twogen_flat(" + std::to_string(param) + ")";
  }
  return "?";
}

void validate_config(const FamilyConfig& cfg) {
  std::vector<std::string> bad;
  if (cfg.templates.empty()) bad.push_back("no factor templates");
  if (cfg.n_max < 2) bad.push_back("n_max must be >= 2");
  if (cfg.max_vertices < 2) bad.push_back("max_vertices must be >= 2");
  if (cfg.genus_budget == 0 || cfg.crosscap_budget == 0 || cfg.subdivision_budget == 0) bad.push_back("budgets must be positive");
  if (cfg.workers == 0) bad.push_back("workers must be positive");
  if (!bad.empty()) throw Error(ErrorKind::BadInput, "invalid family config", bad);
}

namespace {

std::vector<FactorTemplate> parse_template(const json& t) {
  if (t.is_object()) {
    auto fam = t.value("family", std::string());
    if (fam == "field") return {{Family::Field, 0}};
    if (fam == "chain" && t.contains("k")) {
      if (t["k"].is_array() && t["k"].size() == 2) {
        std::vector<FactorTemplate> out;
        for (int k = t["k"][0].get<int>(); k <= t["k"][1].get<int>(); ++k) out.push_back({Family::Chain, k});
        return out;
      }
      return {{Family::Chain, t["k"].get<int>()}};
    }
    if (fam == "twogen_xy" && t.contains("q")) return {{Family::TwoGenXY, t["q"].get<int>()}};
    if (fam == "twogen_flat" && t.contains("q")) return {{Family::TwoGenFlat, t["q"].get<int>()}};
    throw Error(ErrorKind::BadInput, "bad template " + t.dump());
  }
  if (!t.is_string()) throw Error(ErrorKind::BadInput, "bad template " + t.dump());
  static const std::regex re(R"((field|F|chain|twogen_xy|twogen_flat)(?:\((\d+)(?:\.\.(\d+))?\))?)");
  const auto s = t.get<std::string>();
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw Error(ErrorKind::BadInput, "bad template '" + s + "'");
  const std::string fam = m[1];
  if (fam == "field" || fam == "F") return {{Family::Field, 0}};
  if (!m[2].matched) throw Error(ErrorKind::BadInput, "template '" + s + "' needs a parameter");
  const int lo = std::stoi(m[2]);
  const int hi = m[3].matched ? std::stoi(m[3]) : lo;
  const Family f = fam == "chain" ? Family::Chain : fam == "twogen_xy" ? Family::TwoGenXY : Family::TwoGenFlat;
  std::vector<FactorTemplate> out;
  for (int p = lo; p <= hi; ++p) out.push_back({f, p});
  return out;
}

}  // namespace

FamilyConfig config_from_json(const json& j) {
  FamilyConfig cfg;
  try {
    if (!j.is_object() || !j.contains("templates")) throw Error(ErrorKind::BadInput, "config needs 'templates'");
    for (const auto& t : j["templates"])
      for (auto& ft : parse_template(t)) cfg.templates.push_back(ft);
    cfg.n_max = j.value("n_max", cfg.n_max);
    cfg.max_vertices = j.value("max_vertices", cfg.max_vertices);
    cfg.workers = j.value("workers", cfg.workers);
    if (j.contains("budgets")) {
      const auto& b = j["budgets"];
      cfg.genus_budget = b.value("genus", cfg.genus_budget);
      cfg.crosscap_budget = b.value("crosscap", cfg.crosscap_budget);
      cfg.subdivision_budget = b.value("subdivision", cfg.subdivision_budget);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("config: ") + e.what());
  }
  validate_config(cfg);
  for (const auto& t : cfg.templates) (void)t.lattice();  // parameter errors surface here
  return cfg;
}

json config_to_json(const FamilyConfig& cfg) {
  json t = json::array();
  for (const auto& ft : cfg.templates) t.push_back(ft.label() == "F" ? std::string("field") : ft.label());
  return {{"templates", t},
          {"n_max", cfg.n_max},
          {"max_vertices", cfg.max_vertices},
          {"budgets", {{"genus", cfg.genus_budget}, {"crosscap", cfg.crosscap_budget}, {"subdivision", cfg.subdivision_budget}}},
          {"workers", cfg.workers}};
}

std::vector<FamilyMember> enumerate_family(const FamilyConfig& cfg) {
  validate_config(cfg);
  // Drop templates that describe the same lattice.
  std::vector<FactorTemplate> tpl;
  std::vector<IdealLattice> lat;
  std::set<std::string> keys;
  for (const auto& t : cfg.templates) {
    auto L = t.lattice();
    if (keys.insert(lattice_key(L)).second) {
      tpl.push_back(t);
      lat.push_back(std::move(L));
    }
  }
  const int T = static_cast<int>(tpl.size());
  std::vector<FamilyMember> out;
  std::set<std::string> seen;
  for (int n = 2; n <= cfg.n_max; ++n) {
    // Non-increasing index sequences idx[0] >= idx[1] >= ..., enumerated in
    // lexicographic order of the reversed sequence.
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      long long total = 1;
      bool over = false;
      for (int i : idx) {
        total *= static_cast<long long>(lat[i].size());
        if (total - 2 > cfg.max_vertices) over = true;
      }
      if (!over && total - 2 <= cfg.max_vertices) {
        std::vector<IdealLattice> fs;
        std::string label;
        for (int i : idx) {
          fs.push_back(lat[i]);
          if (!label.empty()) label += " x ";
          label += tpl[i].label();
        }
        auto ring = product_ring(std::move(fs));
        if (seen.insert(unordered_key(ring)).second) out.push_back({std::move(ring), label, static_cast<int>(total - 2)});
      }
      // next multiset: increment like an odometer keeping idx non-increasing
      int p = n - 1;
      while (p >= 0 && idx[p] == (p == 0 ? T - 1 : idx[p - 1])) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < n; ++q) idx[q] = 0;
    }
  }
  return out;
}

}  // namespace pisg
