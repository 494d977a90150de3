#pragma once

#include <vector>

#include "smgkit/enumerate.hpp"
#include "smgkit/green.hpp"
#include "smgkit/type_ii.hpp"

namespace smgkit {

// The minimal injective congruence of a transitive group-mapping action,
// computed as mutual reachability of labeled points under single type-II
// elements. Points are indexed g * base + b; the result is a normalized
// partition (see congruence.hpp).
//
// The same relation is recomputed with the moving elements restricted to
// the type-II part of the 0-minimal ideal; the two partitions must agree
// (ConsistencyError otherwise).
std::vector<int> tilson_congruence(const EnumeratedSemigroup& s,
                                   const GreenData& gd,
                                   const TypeIICertificate& s2);

// The partition computed from one chosen element set, without the
// restricted cross-check: exposed for the oracle tests.
std::vector<int> reachability_congruence(const EnumeratedSemigroup& s,
                                         const std::vector<int>& movers);

}  // namespace smgkit
