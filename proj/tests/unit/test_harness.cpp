#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "pisg/error.hpp"
#include "pisg/family.hpp"
#include "pisg/io.hpp"
#include "pisg/ledger.hpp"
#include "pisg/pis.hpp"
#include "pisg/verify.hpp"

using namespace pisg;
namespace fs = std::filesystem;

namespace {

FamilyConfig config(std::vector<FactorTemplate> t, int n_max, int cap = 30) {
  FamilyConfig c;
  c.templates = std::move(t);
  c.n_max = n_max;
  c.max_vertices = cap;
  return c;
}

std::set<std::string> labels(const std::vector<FamilyMember>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(m.label);
  return out;
}

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name) : path(fs::temp_directory_path() / ("pisg_" + name)) { fs::remove(path); }
  ~TempFile() { fs::remove(path); }
  std::string str() const { return path.string(); }
};

const FactorTemplate kF{Family::Field, 0};
FactorTemplate ch(int k) { return {Family::Chain, k}; }

}  // namespace

TEST_CASE("enumerate_family") {
  CHECK(labels(enumerate_family(config({kF}, 3))) == std::set<std::string>{"F x F", "F x F x F"});
  CHECK(labels(enumerate_family(config({kF, ch(1)}, 2))) == std::set<std::string>{"F x F", "chain(1) x F", "chain(1) x chain(1)"});

  auto big = labels(enumerate_family(config({kF, ch(1), ch(2)}, 3, 30)));
  CHECK(big.count("chain(2) x chain(1)"));
  CHECK(big.count("chain(1) x F x F"));

  // vertex cap and dedup by factor multiset
  auto capped = enumerate_family(config({kF, ch(1), ch(2), ch(3)}, 4, 12));
  std::set<std::string> keys;
  for (const auto& m : capped) {
    CHECK(m.vertices <= 12);
    CHECK(m.vertices == static_cast<int>(m.ring.ideal_count()) - 2);
    CHECK(keys.insert(unordered_key(m.ring)).second);
  }
  // template order does not change which rings come out
  std::set<std::string> keys2;
  for (const auto& m : enumerate_family(config({ch(3), ch(2), ch(1), kF}, 4, 12))) keys2.insert(unordered_key(m.ring));
  CHECK(keys == keys2);
}

TEST_CASE("config validation and parsing") {
  CHECK_THROWS_AS(validate_config(config({kF}, 1)), Error);
  CHECK_THROWS_AS(validate_config(config({kF}, 3, 1)), Error);
  CHECK_THROWS_AS(validate_config(config({}, 3)), Error);
  auto bad_budget = config({kF}, 3);
  bad_budget.genus_budget = 0;
  CHECK_THROWS_AS(validate_config(bad_budget), Error);

  auto j = json::parse(R"J({"templates": ["field", "chain(1..3)", "twogen_flat(2)"], "n_max": 4, "max_vertices": 30,
                            "budgets": {"genus": 1000, "crosscap": 2000, "subdivision": 3000}, "workers": 2})J");
  auto c = config_from_json(j);
  CHECK(c.templates.size() == 5);
  CHECK(c.genus_budget == 1000);
  CHECK(c.crosscap_budget == 2000);
  CHECK(c.subdivision_budget == 3000);
  CHECK(c.workers == 2);
  CHECK(config_to_json(config_from_json(config_to_json(c))) == config_to_json(c));
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"templates": ["banana"]})")), Error);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"templates": ["field"], "n_max": 1})")), Error);
}

TEST_CASE("ring spec json") {
  auto j = json::parse(R"({"factors": [{"family": "chain", "k": 2}, {"family": "field"}, {"family": "twogen_xy", "q": 2}]})");
  auto r = ring_spec_from_json(j);
  CHECK(r.factor_count() == 3);
  CHECK(canonical_key(ring_spec_from_json(ring_spec_to_json(r))) == canonical_key(r));
  CHECK(ring_spec_to_json(ring_spec_from_json(ring_spec_to_json(r))) == ring_spec_to_json(r));

  auto custom = json::parse(R"({"factors": [{"family": "custom", "elements": ["0", "a", "m", "R"],
      "join": [[0,1,2,3],[1,1,2,3],[2,2,2,3],[3,3,3,3]], "maximal": "m"}, {"family": "field"}]})");
  auto rc = ring_spec_from_json(custom);
  CHECK(canonical_key(rc) == canonical_key(product_ring({make_chain(2), make_field()})));
  CHECK(canonical_key(ring_spec_from_json(ring_spec_to_json(rc))) == canonical_key(rc));

  CHECK_THROWS_AS(ring_spec_from_json(json::parse(R"({"factors": []})")), Error);
  CHECK_THROWS_AS(ring_spec_from_json(json::parse(R"({"factors": [{"family": "chain"}]})")), Error);
  CHECK_THROWS_AS(ring_spec_from_json(json::parse(R"({"rings": 3})")), Error);
  auto not_local = json::parse(R"({"factors": [{"family": "custom", "elements": ["0", "A", "B", "R"],
      "join": [[0,1,2,3],[1,1,3,3],[2,3,2,3],[3,3,3,3]], "maximal": "A"}]})");
  CHECK_THROWS_AS(ring_spec_from_json(not_local), Error);
}

TEST_CASE("certificate, witness and profile json round-trip") {
  auto lg = build_pis(product_ring({make_chain(1), make_field(), make_field()}));
  const SurfaceOptions opts{1'000'000, std::nullopt};
  for (const auto& c : {genus_of(lg.graph, opts), crosscap_of(lg.graph, opts)}) {
    auto j = to_json(c);
    auto back = certificate_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(json::parse(j.dump()) == j);
    CHECK(check_certificate(lg.graph, back));
  }
  auto k5 = find_subdivision(lg.graph, complete_pattern(5));
  REQUIRE(k5.witness);
  auto wj = to_json(*k5.witness);
  auto wb = witness_from_json(wj);
  CHECK(to_json(wb) == wj);
  CHECK(check_subdivision_witness(lg.graph, complete_pattern(5), wb));
  CHECK(to_json(*k5.witness, &lg.labels).contains("vertex_labels"));

  auto p = classify(product_ring({make_chain(2), make_chain(1)}));
  CHECK(to_json(profile_from_json(to_json(p))) == to_json(p));
}

TEST_CASE("ledger") {
  TempFile f("ledger.jsonl");
  {
    Ledger l(f.str());
    CHECK_FALSE(l.lookup("k").has_value());
    l.append({"k", 100, json{{"v", 1}}});
    auto got = l.lookup("k");
    REQUIRE(got);
    CHECK(got->budget == 100);
    CHECK(got->data == json{{"v", 1}});
  }
  ledger_append(f.str(), {"k", 500, json{{"v", 2}}});
  ledger_append(f.str(), {"k", 200, json{{"v", 3}}});
  ledger_append(f.str(), {"other", 900, json{{"v", 4}}});
  auto best = ledger_lookup(f.str(), "k");
  REQUIRE(best);
  CHECK(best->budget == 500);
  CHECK(best->data == json{{"v", 2}});

  {
    std::ofstream out(f.path, std::ios::app);
    out << "{not json\n";
  }
  ledger_append(f.str(), {"k", 800, json{{"v", 5}}});
  std::vector<Error> problems;
  auto after = ledger_lookup(f.str(), "k", &problems);
  REQUIRE(problems.size() == 1);
  CHECK(problems[0].kind() == ErrorKind::CorruptLedger);
  CHECK(std::string(problems[0].what()).find(":5") != std::string::npos);
  REQUIRE(after);
  CHECK(after->budget == 800);

  TempFile none("missing.jsonl");
  CHECK_FALSE(ledger_lookup(none.str(), "k").has_value());
}

TEST_CASE("compare turns interval certificates into verdicts") {
  PredictedProfile p;
  p.planar = Tri::No;
  p.genus_class = GenusClass::AtLeastTwo;
  p.crosscap_class = CrosscapClass::AtLeastThree;
  ComputedProfile c;
  c.planar = false;

  auto verdict_of = [](const std::vector<FieldCheck>& cs, const std::string& field) {
    for (const auto& x : cs)
      if (x.field == field) return x.verdict;
    FAIL("missing field " << field);
    return Verdict::Inconclusive;
  };

  SurfaceCertificate g;
  g.measure = Measure::Genus;
  g.lower = 2;
  g.upper = -1;
  g.status = SearchStatus::BudgetExhausted;
  SurfaceCertificate cr;
  cr.measure = Measure::Crosscap;
  cr.lower = 3;
  cr.upper = 5;
  auto checks = compare(p, c, g, cr);
  CHECK(verdict_of(checks, "planar") == Verdict::Pass);
  CHECK(verdict_of(checks, "genus_class") == Verdict::Pass);
  CHECK(verdict_of(checks, "crosscap_class") == Verdict::Pass);

  // an interval that straddles the class boundary is inconclusive
  cr.lower = 2;
  CHECK(verdict_of(compare(p, c, g, cr), "crosscap_class") == Verdict::Inconclusive);
  // an exact value outside the class is a failure
  cr.lower = cr.upper = 2;
  CHECK(verdict_of(compare(p, c, g, cr), "crosscap_class") == Verdict::Fail);
  // a crosscap of exactly one always fails, whatever was predicted
  p.crosscap_class = CrosscapClass::NeverOne;
  cr.lower = cr.upper = 1;
  CHECK(verdict_of(compare(p, c, g, cr), "crosscap_class") == Verdict::Fail);
  // a wrong yes/no is a failure
  c.planar = true;
  CHECK(verdict_of(compare(p, c, g, cr), "planar") == Verdict::Fail);
}

TEST_CASE("verify on a small family") {
  auto cfg = config({kF, ch(1), ch(2)}, 3, 14);
  cfg.genus_budget = cfg.crosscap_budget = cfg.subdivision_budget = 2'000'000;
  auto rep = verify(cfg);
  CHECK(rep.rows.size() == enumerate_family(cfg).size());
  // chain(2) x chain(2) is the one ring here that fails, and only on the
  // crosscap class: it is predicted >= 3 but has a 2-crosscap embedding
  CHECK(rep.fail == 1);
  for (const auto& row : rep.rows) {
    if (row.verdict != Verdict::Fail) continue;
    CHECK(row.label == "chain(2) x chain(2)");
    for (const auto& c : row.checks) CHECK((c.verdict != Verdict::Fail || c.field == "crosscap_class"));
    REQUIRE(row.crosscap);
    CHECK(row.crosscap->exact());
    CHECK(row.crosscap->value() == 2);
  }
  const auto members = enumerate_family(cfg);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    CHECK(row.key == canonical_key(members[i].ring));
    const Graph g = build_pis(members[i].ring).graph;
    if (row.genus) CHECK(check_certificate(g, certificate_from_json(to_json(*row.genus))));
    if (row.crosscap) CHECK(check_certificate(g, certificate_from_json(to_json(*row.crosscap))));
    CHECK(row.computed.crosschecks.empty());
  }
  CHECK(summary_table(rep).find("F x F x F") != std::string::npos);

  // worker count and ledger reuse change timings only
  TempFile f("verify.jsonl");
  cfg.workers = 3;
  Ledger led(f.str());
  auto again = verify(cfg, &led);
  CHECK(led.size() > 0);
  Ledger led2(f.str());
  auto reused = verify(cfg, &led2);
  REQUIRE(again.rows.size() == rep.rows.size());
  REQUIRE(reused.rows.size() == rep.rows.size());
  int reused_rows = 0;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    CHECK(again.rows[i].key == rep.rows[i].key);
    CHECK(again.rows[i].verdict == rep.rows[i].verdict);
    CHECK(reused.rows[i].verdict == rep.rows[i].verdict);
    reused_rows += reused.rows[i].reused;
    auto strip = [](json j) {
      j.erase("millis");
      j.erase("reused");
      return j;
    };
    CHECK(strip(to_json(reused.rows[i])) == strip(to_json(rep.rows[i])));
  }
  CHECK(reused_rows > 0);
}
