#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pisg/classifier.hpp"
#include "pisg/embedding.hpp"
#include "pisg/graph.hpp"
#include "pisg/patterns.hpp"
#include "pisg/ring.hpp"
#include "pisg/surface.hpp"

namespace pisg {

using json = nlohmann::ordered_json;

/// Ring-spec document: {"factors": [{"family": "field"}, {"family": "chain",
/// "k": 2}, {"family": "twogen_xy", "q": 2}, {"family": "custom", "elements":
/// [...], "join": [[...]], "maximal": "M"}]}. Throws Error(BadInput) for
/// malformed documents; lattice errors propagate unchanged.
RingSpec ring_spec_from_json(const json& j);
json ring_spec_to_json(const RingSpec& ring);
RingSpec load_ring_spec(const std::string& path);
json read_json_file(const std::string& path);

json to_json(const PredictedProfile& p);
PredictedProfile profile_from_json(const json& j);

/// `labels` (optional) adds host vertex labels next to the indices.
json to_json(const PatternWitness& w, const std::vector<std::string>* labels = nullptr);
PatternWitness witness_from_json(const json& j);

json to_json(const SignedRotationSystem& s);
SignedRotationSystem rotation_from_json(const json& j);

json to_json(const SurfaceCertificate& c);
SurfaceCertificate certificate_from_json(const json& j);

json to_json(const GraphStats& s);

}  // namespace pisg
