#pragma once

#include <map>
#include <string>
#include <vector>

#include "pisg/ring.hpp"

namespace pisg {

enum class Tri { Yes, No, NotCovered };
enum class GenusClass { Zero, One, AtLeastTwo, NotCovered };
enum class CrosscapClass { Zero, Two, AtLeastThree, NeverOne };

const char* to_string(Tri t);
const char* to_string(GenusClass g);
const char* to_string(CrosscapClass c);
Tri parse_tri(const std::string& s);
GenusClass parse_genus_class(const std::string& s);
CrosscapClass parse_crosscap_class(const std::string& s);

/// Graph-class predictions for PIS(R) derived from the shape of R alone.
struct PredictedProfile {
  Tri split = Tri::NotCovered;
  Tri threshold = Tri::NotCovered;
  Tri cograph = Tri::NotCovered;
  Tri cactus = Tri::NotCovered;
  Tri unicyclic = Tri::NotCovered;
  Tri planar = Tri::NotCovered;
  Tri outerplanar = Tri::NotCovered;
  GenusClass genus_class = GenusClass::NotCovered;
  CrosscapClass crosscap_class = CrosscapClass::NeverOne;
  std::map<std::string, std::vector<std::string>> citations;  // field -> rule tags
  std::vector<std::string> notes;
};

// All predicates are insensitive to factor order. Shapes with fewer than two
// factors are outside every rule and give NotCovered (NeverOne).
Tri predict_split(const RingShape& s);
Tri predict_threshold_cograph(const RingShape& s);
Tri predict_cactus(const RingShape& s);
Tri predict_unicyclic(const RingShape& s);
Tri predict_planar(const RingShape& s);
Tri predict_outerplanar(const RingShape& s);
GenusClass predict_genus_class(const RingShape& s);
CrosscapClass predict_crosscap_class(const RingShape& s);

PredictedProfile classify(const RingShape& s);
inline PredictedProfile classify(const RingSpec& r) { return classify(shape_summary(r)); }

/// Checks the implications between profile fields; returns the violations.
std::vector<std::string> profile_violations(const PredictedProfile& p);

}  // namespace pisg
