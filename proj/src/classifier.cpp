#include "pisg/classifier.hpp"

#include <algorithm>

#include "pisg/error.hpp"

namespace pisg {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::NotCovered: return "not-covered";
  }
  return "?";
}

const char* to_string(GenusClass g) {
  switch (g) {
    case GenusClass::Zero: return "0";
    case GenusClass::One: return "1";
    case GenusClass::AtLeastTwo: return ">=2";
    case GenusClass::NotCovered: return "not-covered";
  }
  return "?";
}

const char* to_string(CrosscapClass c) {
  switch (c) {
    case CrosscapClass::Zero: return "0";
    case CrosscapClass::Two: return "2";
    case CrosscapClass::AtLeastThree: return ">=3";
    case CrosscapClass::NeverOne: return "never-1";
  }
  return "?";
}

Tri parse_tri(const std::string& s) {
  for (Tri t : {Tri::Yes, Tri::No, Tri::NotCovered})
    if (s == to_string(t)) return t;
  throw Error(ErrorKind::BadInput, "unknown tri-state '" + s + "'");
}

GenusClass parse_genus_class(const std::string& s) {
  for (GenusClass g : {GenusClass::Zero, GenusClass::One, GenusClass::AtLeastTwo, GenusClass::NotCovered})
    if (s == to_string(g)) return g;
  throw Error(ErrorKind::BadInput, "unknown genus class '" + s + "'");
}

CrosscapClass parse_crosscap_class(const std::string& s) {
  for (CrosscapClass c : {CrosscapClass::Zero, CrosscapClass::Two, CrosscapClass::AtLeastThree, CrosscapClass::NeverOne})
    if (s == to_string(c)) return c;
  throw Error(ErrorKind::BadInput, "unknown crosscap class '" + s + "'");
}

namespace {

// Per-factor summary reduced to what the rules look at.
struct Counts {
  int n = 0;
  int fields = 0;
  std::vector<const FactorShape*> others;  // non-field factors
};

Counts counts(const RingShape& s) {
  Counts c;
  c.n = static_cast<int>(s.factors.size());
  for (const auto& f : s.factors) {
    if (f.is_field) ++c.fields;
    else c.others.push_back(&f);
  }
  return c;
}

bool one_ideal(const FactorShape* f) { return f->nontrivial == 1; }
bool chain_of(const FactorShape* f, int k) { return f->is_chain && f->nontrivial == k; }

Tri yes_no(bool b) { return b ? Tri::Yes : Tri::No; }

// F x R2 with I*(R2) = {M2}
bool field_times_one(const Counts& c) { return c.n == 2 && c.fields == 1 && one_ideal(c.others[0]); }
bool all_fields(const Counts& c, int n) { return c.n == n && c.fields == n; }
// R1 x F2 x F3 with I*(R1) = {M1}
bool one_times_two_fields(const Counts& c) { return c.n == 3 && c.fields == 2 && one_ideal(c.others[0]); }
// R1 x R2, I*(R1) = {I1, M1} a chain, I*(R2) = {M2}
bool chain2_times_one(const Counts& c) {
  if (c.n != 2 || c.fields != 0) return false;
  return (chain_of(c.others[0], 2) && one_ideal(c.others[1])) || (chain_of(c.others[1], 2) && one_ideal(c.others[0]));
}

}  // namespace

Tri predict_split(const RingShape& s) {
  const auto c = counts(s);
  if (c.n < 2) return Tri::NotCovered;
  return yes_no(all_fields(c, 3) || all_fields(c, 2) || field_times_one(c));
}

Tri predict_threshold_cograph(const RingShape& s) {
  const auto c = counts(s);
  if (c.n < 2) return Tri::NotCovered;
  return yes_no(all_fields(c, 2) || field_times_one(c));
}

Tri predict_cactus(const RingShape& s) {
  const auto c = counts(s);
  if (c.n < 2) return Tri::NotCovered;
  return yes_no(field_times_one(c));
}

Tri predict_unicyclic(const RingShape& s) { return predict_cactus(s); }

Tri predict_planar(const RingShape& s) {
  const auto c = counts(s);
  if (c.n < 2) return Tri::NotCovered;
  if (all_fields(c, 3) || all_fields(c, 2)) return Tri::Yes;
  if (c.n == 2 && c.fields == 0 && one_ideal(c.others[0]) && one_ideal(c.others[1])) return Tri::Yes;
  if (c.n == 2 && c.fields == 1 && c.others[0]->is_chain) return Tri::Yes;
  return Tri::No;
}

Tri predict_outerplanar(const RingShape& s) {
  const auto c = counts(s);
  if (c.n < 2) return Tri::NotCovered;
  return yes_no(all_fields(c, 3) || all_fields(c, 2) || field_times_one(c));
}

GenusClass predict_genus_class(const RingShape& s) {
  const auto c = counts(s);
  if (c.n < 2) return GenusClass::NotCovered;
  if (predict_planar(s) == Tri::Yes) return GenusClass::Zero;
  if (one_times_two_fields(c) || chain2_times_one(c)) return GenusClass::One;
  return GenusClass::AtLeastTwo;
}

CrosscapClass predict_crosscap_class(const RingShape& s) {
  const auto c = counts(s);
  if (c.n < 2) return CrosscapClass::NeverOne;
  if (predict_planar(s) == Tri::Yes) return CrosscapClass::Zero;
  if (one_times_two_fields(c) || chain2_times_one(c)) return CrosscapClass::Two;
  return CrosscapClass::AtLeastThree;
}

PredictedProfile classify(const RingShape& s) {
  PredictedProfile p;
  const auto c = counts(s);
  p.split = predict_split(s);
  p.threshold = p.cograph = predict_threshold_cograph(s);
  p.cactus = predict_cactus(s);
  p.unicyclic = predict_unicyclic(s);
  p.planar = predict_planar(s);
  p.outerplanar = predict_outerplanar(s);
  p.genus_class = predict_genus_class(s);
  p.crosscap_class = predict_crosscap_class(s);
  if (c.n < 2) {
    p.notes.push_back("local ring: no rule applies");
    return p;
  }

  auto cite = [&](const std::string& field, const std::string& tag) { p.citations[field].push_back(tag); };
  if (all_fields(c, 3)) cite("split", "split.three_fields");
  else if (c.n == 2) cite("split", "split.two_factors");
  else cite("split", "split.three_fields");
  cite("threshold", "threshold_cograph.equivalence");
  cite("cograph", "threshold_cograph.equivalence");
  cite("cactus", "cactus.field_times_single_ideal");
  cite("unicyclic", "unicyclic.field_times_single_ideal");
  if (all_fields(c, 3)) cite("planar", "planar.three_fields");
  else if (all_fields(c, 2)) cite("planar", "planar.two_fields");
  else if (c.n == 2 && c.fields == 0) cite("planar", "planar.two_single_ideal_factors");
  else if (c.n == 2 && c.fields == 1) cite("planar", "planar.field_times_principal");
  else cite("planar", "planar.classification");
  cite("outerplanar", "outerplanar.classification");
  if (p.genus_class == GenusClass::Zero) {
    cite("genus_class", "planar.classification");
  } else if (one_times_two_fields(c)) {
    cite("genus_class", "genus_one.single_ideal_times_two_fields");
  } else if (chain2_times_one(c)) {
    cite("genus_class", "genus_one.chain2_times_single_ideal");
  } else {
    cite("genus_class", "genus_one.classification");
    if (c.n >= 5) {
      cite("genus_class", "genus.k55_subdivision");
      p.notes.push_back("genus >= 3 for five or more factors (K5,5 subdivision)");
    }
  }
  cite("crosscap_class", "crosscap.not_projective");
  if (p.crosscap_class == CrosscapClass::Zero) cite("crosscap_class", "planar.classification");
  else cite("crosscap_class", "crosscap_two.classification");
  return p;
}

std::vector<std::string> profile_violations(const PredictedProfile& p) {
  std::vector<std::string> v;
  if (p.threshold == Tri::Yes && p.split != Tri::Yes) v.push_back("threshold without split");
  if (p.threshold == Tri::Yes && p.cograph != Tri::Yes) v.push_back("threshold without cograph");
  if (p.unicyclic == Tri::Yes && p.cactus != Tri::Yes) v.push_back("unicyclic without cactus");
  if (p.outerplanar == Tri::Yes && p.planar != Tri::Yes) v.push_back("outerplanar without planar");
  const bool planar = p.planar == Tri::Yes;
  if (planar != (p.genus_class == GenusClass::Zero)) v.push_back("planar disagrees with genus class");
  if (planar != (p.crosscap_class == CrosscapClass::Zero)) v.push_back("planar disagrees with crosscap class");
  return v;
}

}  // namespace pisg
