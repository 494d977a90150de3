#pragma once

#include <string>
#include <vector>

#include "smgkit/enumerate.hpp"
#include "smgkit/green.hpp"
#include "smgkit/rees.hpp"

namespace smgkit {

enum class MonoidCategory { Group, GroupWithZero, Small, Smallish, General };

std::string to_string(MonoidCategory c);

// Classification of a finite monoid. Smallish means: the ideal I of
// non-units has a power I^k equal to the unique 0-minimal ideal I(M),
// which is 0-simple. Small additionally means M = U(M) union I(M).
// Smallishness is computed twice, from iterated ideal powers (checked
// against the closed form I E(I) I) and from the regular J-class census;
// disagreement raises ConsistencyError.
struct Classification {
  bool has_zero = false;
  std::vector<int> units;            // H-class of the identity
  bool is_smallish = false;
  bool is_small = false;
  int ideal_power = 0;               // smallest k with I^k = I^{k+1}
  std::vector<int> ideal_with_zero;  // I(M) when smallish, sorted
  MonoidCategory category = MonoidCategory::General;
};

// Throws ValidationError when the semigroup has no identity element.
Classification classify_monoid(const EnumeratedSemigroup& s,
                               const GreenData& gd);

// U(M) union I(M), sorted; only defined for smallish monoids.
std::vector<int> small_submonoid_members(const Classification& c);

}  // namespace smgkit
