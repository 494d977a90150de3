#pragma once

// Shared instances for the test suites. Everything here is built
// programmatically; the bundled JSON corpus under data/ is asserted equal to
// these in test_descriptions.cpp, so the files can never drift.

#include <string>
#include <vector>

#include "smgkit/description.hpp"
#include "smgkit/flows.hpp"
#include "smgkit/rees.hpp"

namespace smgkit::testfix {

// The running 97-element example: Z2 ideal on a 6-point base with a 7x6
// structure matrix, plus the order-4 permutation sigma and the fold r.
SemigroupDescription mtf();

// One-point base, G = Z2: the smallest group-mapping instance (Z2 with zero).
SemigroupDescription toy_b1();

// Two-point base, G = Z2, 2x2 structure matrix [[1,1],[1,-1]]; 9 elements.
SemigroupDescription toy_b2();

// Three-point base, G = Z2, 10x3 matrix plus a 3-cycle and a fold; 82
// elements, classified General.
SemigroupDescription toy_b3();

// toy_b2's ideal with a transposition adjoined and an identity: an
// 11-element small monoid.
SemigroupDescription small_c2();

// Two columns tied together by a rank-one matrix; not group-mapping
// (the right-letter action is not faithful). Unit-test only, not bundled.
ReesStructure colpair_rees();

struct FlowFixture {
  FlowAutomaton aut;
  FlowAssignment fa;
};

// Two-state aperiodic flow over the full generator alphabet of toy_b2:
// singleton cross-section values, each nonzero letter lands on the state of
// its target column. No flow on full-support states exists for this matrix.
FlowFixture toy_b2_flow();

// One-state flow for toy_b1.
FlowFixture toy_b1_flow();

// Built form of a description: the enumerated semigroup plus the generator
// alphabet in file order (names and elements separately, as the flow and
// evaluation layers want them).
struct Built {
  SemigroupDescription d;
  EnumeratedSemigroup s;
  std::vector<std::string> names;
  std::vector<RowMonomialElement> letters;
};

Built build(const SemigroupDescription& d, std::size_t cap = 200000);

}  // namespace smgkit::testfix
