#pragma once

#include "pisg/graph.hpp"
#include "pisg/ring.hpp"

namespace pisg {

/// Prime ideal sum graph: vertices are the nonzero proper ideals of `ring`
/// (in enumeration order), I ~ J iff I + J is prime.
///
/// `workers > 1` splits the pair scan across threads; the result is identical
/// to the sequential construction. Throws Error(LocalRing) for one factor.
LabeledGraph build_pis(const RingSpec& ring, unsigned workers = 1);

}  // namespace pisg
