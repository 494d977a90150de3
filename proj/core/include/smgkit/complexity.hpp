#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smgkit/classify.hpp"
#include "smgkit/enumerate.hpp"
#include "smgkit/green.hpp"

namespace smgkit {

// Restriction of a small monoid to the units, the zero, and the ideal
// columns over one orbit of the unit group on the base.
struct OrbitMonoid {
  std::vector<int> orbit;          // base points, sorted
  std::vector<int> members;        // parent element indices, sorted
  EnumeratedSemigroup monoid;      // the restriction; index i is members[i]
};

// Throws ValidationError unless the classification says small.
std::vector<OrbitMonoid> orbit_monoids(const EnumeratedSemigroup& m,
                                       const Classification& c);

struct OrbitEvidence {
  std::vector<int> orbit;
  bool aperiodic = false;
  int eg_size = 0;        // size of the idempotent-generated part
  // Witness for a failing orbit: a group H-class of size > 1 inside the
  // idempotent-generated part, as parent element indices.
  std::vector<int> witness;
};

struct Tilson2J {
  int complexity = 0;  // 1 or 2
  std::vector<OrbitEvidence> orbits;
};

// Complexity of a small group-mapping monoid with nontrivial unit-ward
// group content: 1 exactly when every orbit monoid has an aperiodic
// idempotent-generated part, else 2.
Tilson2J tilson_2j(const EnumeratedSemigroup& m, const Classification& c);

struct ComplexityClaim {
  std::string claim;   // machine-ish: "c == 0", "c <= 2", "c == 1", ...
  std::string reason;
};

struct ComplexityOptions {
  bool recursive = false;
  int max_depth = 6;
  std::size_t cap = EnumeratedSemigroup::kDefaultCap;
  // Decides "complexity <= 1?" for a leaf the structural rules cannot
  // settle (wired to the flow machinery by the CLI). nullopt = no answer.
  std::function<std::optional<bool>(const EnumeratedSemigroup&)> leaf_is_c1;
};

struct ComplexityReport {
  std::string name;
  int size = 0;
  bool is_monoid = false;
  bool aperiodic = false;
  std::string category;  // classify outcome, or "not a monoid"
  bool gm = false;
  int lower = 0;
  int upper = -1;  // -1 = no upper bound established
  std::vector<ComplexityClaim> claims;
  std::vector<OrbitEvidence> orbit_evidence;  // when the 2J test ran
  std::vector<ComplexityReport> rlm_chain;    // recursion trace, outermost first
};

ComplexityReport complexity_report(const EnumeratedSemigroup& s,
                                   const std::string& name,
                                   const ComplexityOptions& opt = {});

}  // namespace smgkit
