#include "pisg/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

#include "pisg/blocks.hpp"
#include "pisg/embedding.hpp"
#include "pisg/pis.hpp"

namespace pisg {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Planar iff every component has a genus-0 embedding.
std::optional<bool> planar_by_search(const Graph& g, std::uint64_t budget) {
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 5) continue;
    auto r = search_embedding(g.induced(comp), {0, false, budget});
    if (r.status == SearchStatus::BudgetExhausted) return std::nullopt;
    if (r.status == SearchStatus::Absent) return false;
  }
  return true;
}

struct KuratowskiResult {
  std::optional<bool> free;  // no subdivision of either pattern
  std::optional<PatternWitness> witness;
};

KuratowskiResult kuratowski(const Graph& g, std::initializer_list<const char*> patterns, std::uint64_t budget) {
  KuratowskiResult r;
  bool unknown = false;
  for (const char* name : patterns) {
    auto res = find_subdivision(g, parse_subdivision_pattern(name), {{}, budget});
    if (res.status == SearchStatus::Found) {
      r.free = false;
      r.witness = std::move(res.witness);
      return r;
    }
    if (res.status == SearchStatus::BudgetExhausted) unknown = true;
  }
  if (!unknown) r.free = true;
  return r;
}

std::optional<bool> agree(const char* what, std::optional<bool> a, std::optional<bool> b, std::vector<std::string>& notes) {
  if (a && b && *a != *b) {
    notes.push_back(std::string(what) + ": subdivision search says " + (*a ? "yes" : "no") + ", embedding search says " + (*b ? "yes" : "no"));
    return std::nullopt;
  }
  return a ? a : b;
}

}  // namespace

ComputedProfile compute_invariants(const Graph& g, std::uint64_t subdivision_budget, std::uint64_t embedding_budget) {
  ComputedProfile c;
  auto s = is_split(g);
  c.split = s.member;
  c.split_obstruction = std::move(s.witness);
  auto t = is_threshold(g);
  c.threshold = t.member;
  c.threshold_obstruction = std::move(t.witness);
  auto co = is_cograph(g);
  c.cograph = co.member;
  c.cograph_obstruction = std::move(co.witness);
  c.cactus = is_cactus(g);
  c.unicyclic = is_unicyclic(g);

  auto kp = kuratowski(g, {"K5", "K33"}, subdivision_budget);
  c.planar_obstruction = kp.witness;
  c.planar = agree("planar", kp.free, planar_by_search(g, embedding_budget), c.crosschecks);

  auto ko = kuratowski(g, {"K4", "K23"}, subdivision_budget);
  c.outerplanar_obstruction = ko.witness;
  std::optional<bool> apex;
  {
    auto r = search_embedding(with_apex(g), {0, false, embedding_budget});
    if (r.status != SearchStatus::BudgetExhausted) apex = r.status == SearchStatus::Found;
  }
  c.outerplanar = agree("outerplanar", ko.free, apex, c.crosschecks);
  return c;
}

SurfaceCertificate genus_of_components(const Graph& g, const SurfaceOptions& opts) {
  auto comps = connected_components(g);
  int with_edges = 0;
  for (const auto& comp : comps)
    if (comp.size() > 1) ++with_edges;
  if (with_edges <= 1) return genus_of(g, opts);
  SurfaceCertificate c;
  c.measure = Measure::Genus;
  c.kind = CertificateKind::BlockComposition;
  std::vector<std::vector<int>> maps;
  std::vector<SignedRotationSystem> embs;
  bool all = true;
  for (const auto& comp : comps) {
    if (comp.size() < 2) continue;
    auto part = genus_of(g.induced(comp), opts);
    c.lower += part.lower;
    c.upper = (c.upper < 0 || part.upper < 0) ? -1 : c.upper + part.upper;
    c.nodes += part.nodes;
    if (part.status == SearchStatus::BudgetExhausted) c.status = SearchStatus::BudgetExhausted;
    else if (!part.exact() && c.status == SearchStatus::Found) c.status = SearchStatus::Absent;
    BlockEntry e;
    e.vertices = comp;
    e.genus_lower = part.lower;
    e.genus_upper = part.upper;
    c.blocks.push_back(std::move(e));
    if (part.embedding) {
      maps.push_back(comp);
      embs.push_back(*part.embedding);
    } else {
      all = false;
    }
  }
  // Rotations of different components never interact, so concatenating them
  // gives a rotation system of the whole graph (traced per component).
  if (all) c.embedding = splice_embeddings(g, maps, embs);
  return c;
}

namespace {

std::string yes_no(std::optional<bool> b) { return b ? (*b ? "yes" : "no") : "unknown"; }

FieldCheck tri_check(const std::string& field, Tri p, std::optional<bool> c) {
  FieldCheck f{field, to_string(p), yes_no(c), Verdict::Inconclusive};
  if (p != Tri::NotCovered && c) f.verdict = (*c == (p == Tri::Yes)) ? Verdict::Pass : Verdict::Fail;
  return f;
}

std::string interval(const SurfaceCertificate& c) {
  if (c.exact()) return std::to_string(c.lower);
  return "[" + std::to_string(c.lower) + "," + (c.upper < 0 ? std::string("?") : std::to_string(c.upper)) + "]";
}

// Verdict for "value lies in [lo, hi]" against the computed interval.
Verdict range_verdict(const SurfaceCertificate& c, int lo, int hi) {
  const int clo = c.lower;
  const int chi = c.upper < 0 ? std::numeric_limits<int>::max() : c.upper;
  if (clo >= lo && chi <= hi) return Verdict::Pass;
  if (chi < lo || clo > hi) return Verdict::Fail;
  return Verdict::Inconclusive;
}

}  // namespace

std::vector<FieldCheck> compare(const PredictedProfile& p, const ComputedProfile& c, const std::optional<SurfaceCertificate>& genus,
                                const std::optional<SurfaceCertificate>& crosscap) {
  std::vector<FieldCheck> out;
  out.push_back(tri_check("split", p.split, c.split));
  out.push_back(tri_check("threshold", p.threshold, c.threshold));
  out.push_back(tri_check("cograph", p.cograph, c.cograph));
  out.push_back(tri_check("cactus", p.cactus, c.cactus));
  out.push_back(tri_check("unicyclic", p.unicyclic, c.unicyclic));
  out.push_back(tri_check("planar", p.planar, c.planar));
  out.push_back(tri_check("outerplanar", p.outerplanar, c.outerplanar));
  for (const auto& note : c.crosschecks) out.push_back({"crosscheck", "agreement", note, Verdict::Fail});

  const int big = std::numeric_limits<int>::max();
  {
    FieldCheck f{"genus_class", to_string(p.genus_class), genus ? interval(*genus) : "unknown", Verdict::Inconclusive};
    if (genus) {
      switch (p.genus_class) {
        case GenusClass::Zero: f.verdict = range_verdict(*genus, 0, 0); break;
        case GenusClass::One: f.verdict = range_verdict(*genus, 1, 1); break;
        case GenusClass::AtLeastTwo: f.verdict = range_verdict(*genus, 2, big); break;
        case GenusClass::NotCovered: break;
      }
    }
    out.push_back(f);
  }
  {
    FieldCheck f{"crosscap_class", to_string(p.crosscap_class), crosscap ? interval(*crosscap) : "unknown", Verdict::Inconclusive};
    if (crosscap) {
      switch (p.crosscap_class) {
        case CrosscapClass::Zero: f.verdict = range_verdict(*crosscap, 0, 0); break;
        case CrosscapClass::Two: f.verdict = range_verdict(*crosscap, 2, 2); break;
        case CrosscapClass::AtLeastThree: f.verdict = range_verdict(*crosscap, 3, big); break;
        case CrosscapClass::NeverOne: break;
      }
      // Every ring rules out the projective plane.
      if (crosscap->exact() && crosscap->lower == 1) f.verdict = Verdict::Fail;
    }
    out.push_back(f);
  }
  return out;
}

namespace {

VerificationRow verify_one(const FamilyMember& m, const FamilyConfig& cfg, const Ledger* ledger) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationRow row;
  row.key = canonical_key(m.ring);
  row.label = m.label;
  const auto lg = build_pis(m.ring);
  const Graph& g = lg.graph;
  row.v = g.vertex_count();
  row.e = g.edge_count();
  row.predicted = classify(m.ring);
  row.computed = compute_invariants(g, cfg.subdivision_budget, std::min(cfg.genus_budget, cfg.crosscap_budget));

  const std::uint64_t budget = std::min(cfg.genus_budget, cfg.crosscap_budget);
  if (ledger) {
    if (auto stored = ledger->lookup(row.key); stored && stored->budget >= budget) {
      try {
        auto gc = certificate_from_json(stored->data.at("genus"));
        std::optional<SurfaceCertificate> cc;
        if (!stored->data.at("crosscap").is_null()) cc = certificate_from_json(stored->data.at("crosscap"));
        if (check_certificate(g, gc) && (!cc || check_certificate(g, *cc))) {
          row.genus = std::move(gc);
          row.crosscap = std::move(cc);
          row.reused = true;
        }
      } catch (const std::exception&) {
        // fall through to recomputation
      }
    }
  }
  if (!row.reused) {
    SurfaceOptions go{cfg.genus_budget, 1};
    row.genus = genus_of_components(g, go);
    int with_edges = 0;
    for (const auto& comp : connected_components(g))
      if (comp.size() > 1) ++with_edges;
    if (with_edges <= 1) row.crosscap = crosscap_of(g, SurfaceOptions{cfg.crosscap_budget, 2});
  }
  row.checks = compare(row.predicted, row.computed, row.genus, row.crosscap);
  row.verdict = Verdict::Pass;
  for (const auto& c : row.checks) {
    if (c.verdict == Verdict::Fail) row.verdict = Verdict::Fail;
    else if (c.verdict == Verdict::Inconclusive && row.verdict == Verdict::Pass) row.verdict = Verdict::Inconclusive;
  }
  row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

}  // namespace

VerificationReport verify(const FamilyConfig& cfg, Ledger* ledger) {
  validate_config(cfg);
  const auto family = enumerate_family(cfg);
  VerificationReport rep;
  rep.rows.resize(family.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < family.size();) rep.rows[i] = verify_one(family[i], cfg, ledger);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(family.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (ledger) {
    rep.ledger_problems = ledger->problems();
    const std::uint64_t budget = std::min(cfg.genus_budget, cfg.crosscap_budget);
    for (const auto& r : rep.rows) {
      if (r.reused || !r.genus) continue;
      json data{{"label", r.label}, {"genus", to_json(*r.genus)}, {"crosscap", r.crosscap ? to_json(*r.crosscap) : json(nullptr)}};
      ledger->append({r.key, budget, data});
    }
  }
  for (const auto& r : rep.rows) {
    if (r.verdict == Verdict::Pass) ++rep.pass;
    else if (r.verdict == Verdict::Fail) ++rep.fail;
    else ++rep.inconclusive;
    for (const auto& c : r.checks) ++rep.per_field[c.field][to_string(c.verdict)];
  }
  return rep;
}

json to_json(const ComputedProfile& c, const std::vector<std::string>* labels) {
  auto opt = [](std::optional<bool> b) { return b ? json(*b) : json(nullptr); };
  auto wit = [&](const std::optional<PatternWitness>& w) { return w ? to_json(*w, labels) : json(nullptr); };
  json j;
  j["split"] = opt(c.split);
  j["threshold"] = opt(c.threshold);
  j["cograph"] = opt(c.cograph);
  j["cactus"] = opt(c.cactus);
  j["unicyclic"] = opt(c.unicyclic);
  j["planar"] = opt(c.planar);
  j["outerplanar"] = opt(c.outerplanar);
  j["obstructions"] = {{"split", wit(c.split_obstruction)},
                       {"threshold", wit(c.threshold_obstruction)},
                       {"cograph", wit(c.cograph_obstruction)},
                       {"planar", wit(c.planar_obstruction)},
                       {"outerplanar", wit(c.outerplanar_obstruction)}};
  j["crosschecks"] = c.crosschecks;
  return j;
}

json to_json(const VerificationRow& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"field", c.field}, {"predicted", c.predicted}, {"computed", c.computed}, {"verdict", to_string(c.verdict)}});
  json j;
  j["key"] = r.key;
  j["label"] = r.label;
  j["v"] = r.v;
  j["e"] = r.e;
  j["predicted"] = to_json(r.predicted);
  j["computed"] = to_json(r.computed);
  j["genus"] = r.genus ? to_json(*r.genus) : json(nullptr);
  j["crosscap"] = r.crosscap ? to_json(*r.crosscap) : json(nullptr);
  j["checks"] = checks;
  j["verdict"] = to_string(r.verdict);
  j["millis"] = r.millis;
  j["reused"] = r.reused;
  return j;
}

json to_json(const VerificationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  json problems = json::array();
  for (const auto& p : r.ledger_problems) problems.push_back(p.what());
  json per = json::object();
  for (const auto& [f, m] : r.per_field)
    for (const auto& [v, n] : m) per[f][v] = n;
  return {{"rows", rows},
          {"summary", {{"pass", r.pass}, {"fail", r.fail}, {"inconclusive", r.inconclusive}, {"per_field", per}}},
          {"ledger_problems", problems}};
}

std::string summary_table(const VerificationReport& r) {
  static const char* fields[] = {"split", "threshold", "cograph", "cactus", "unicyclic", "planar", "outerplanar", "genus_class", "crosscap_class"};
  static const char* heads[] = {"spl", "thr", "cog", "cac", "uni", "pla", "out", "genus", "crosscap"};
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-40s %4s %4s", "ring", "v", "e");
  out << buf;
  for (const char* h : heads) {
    std::snprintf(buf, sizeof buf, " %-9s", h);
    out << buf;
  }
  out << " verdict\n";
  for (const auto& row : r.rows) {
    std::snprintf(buf, sizeof buf, "%-40s %4d %4d", row.label.c_str(), row.v, row.e);
    out << buf;
    for (const char* f : fields) {
      std::string cell = "-";
      for (const auto& c : row.checks)
        if (c.field == f) cell = (c.verdict == Verdict::Pass ? "" : c.verdict == Verdict::Fail ? "!" : "?") + c.computed;
      std::snprintf(buf, sizeof buf, " %-9s", cell.c_str());
      out << buf;
    }
    out << ' ' << to_string(row.verdict) << '\n';
  }
  out << "rows: " << r.rows.size() << "  pass: " << r.pass << "  fail: " << r.fail << "  inconclusive: " << r.inconclusive << '\n';
  for (const auto& [f, m] : r.per_field) {
    out << "  " << f << ':';
    for (const auto& [v, n] : m) out << ' ' << v << '=' << n;
    out << '\n';
  }
  return out.str();
}

}  // namespace pisg
