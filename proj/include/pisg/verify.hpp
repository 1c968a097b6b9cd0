#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pisg/classifier.hpp"
#include "pisg/family.hpp"
#include "pisg/graph.hpp"
#include "pisg/ledger.hpp"
#include "pisg/patterns.hpp"
#include "pisg/surface.hpp"

namespace pisg {

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

/// Direct recognizer results. Empty optionals mean the searches ran out of
/// budget; `crosschecks` lists disagreements between independent methods.
struct ComputedProfile {
  std::optional<bool> split, threshold, cograph, cactus, unicyclic, planar, outerplanar;
  std::optional<PatternWitness> split_obstruction, threshold_obstruction, cograph_obstruction;
  std::optional<PatternWitness> planar_obstruction, outerplanar_obstruction;
  std::vector<std::string> crosschecks;
};

/// Planarity by subdivision search (K5, K3,3) cross-checked against a genus-0
/// embedding search; outerplanarity by (K4, K2,3) cross-checked against
/// planarity of the graph plus an apex.
ComputedProfile compute_invariants(const Graph& g, std::uint64_t subdivision_budget, std::uint64_t embedding_budget);

/// Genus of a possibly disconnected graph: the sum over components.
SurfaceCertificate genus_of_components(const Graph& g, const SurfaceOptions& opts);

struct FieldCheck {
  std::string field;
  std::string predicted;
  std::string computed;
  Verdict verdict = Verdict::Inconclusive;
};

struct VerificationRow {
  std::string key;
  std::string label;
  int v = 0;
  int e = 0;
  PredictedProfile predicted;
  ComputedProfile computed;
  std::optional<SurfaceCertificate> genus;
  std::optional<SurfaceCertificate> crosscap;
  std::vector<FieldCheck> checks;
  Verdict verdict = Verdict::Inconclusive;
  double millis = 0;
  bool reused = false;  // surface certificates came from the ledger
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  int pass = 0, fail = 0, inconclusive = 0;
  std::map<std::string, std::map<std::string, int>> per_field;  // field -> verdict -> count
  std::vector<Error> ledger_problems;
};

/// Checks every ring of the family. Budget exhaustion makes a field
/// inconclusive, never failing unless the interval excludes the prediction.
/// With a ledger, stored surface certificates whose budget is at least the
/// configured one are re-checked and reused; fresh ones are appended.
VerificationReport verify(const FamilyConfig& cfg, Ledger* ledger = nullptr);

/// Verdict of one row computed from its profiles and certificates.
std::vector<FieldCheck> compare(const PredictedProfile& p, const ComputedProfile& c, const std::optional<SurfaceCertificate>& genus,
                                const std::optional<SurfaceCertificate>& crosscap);

json to_json(const ComputedProfile& c, const std::vector<std::string>* labels = nullptr);
json to_json(const VerificationRow& r);
json to_json(const VerificationReport& r);
std::string summary_table(const VerificationReport& r);

}  // namespace pisg
