#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smgkit/ev_construction.hpp"
#include "smgkit/group.hpp"
#include "smgkit/row_monomial.hpp"
#include "smgkit/sp_lattice.hpp"

namespace smgkit {

// Deterministic partial automaton: one letter per generator name of the
// semigroup being flowed. trans[q][x] is a state index or -1 (undefined;
// the completion routes it to the sink).
struct FlowAutomaton {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::vector<std::vector<int>> trans;

  int state_index(const std::string& name) const;
  int letter_index(const std::string& name) const;
};

// Assignment of lattice values to automaton states. SP values are literal
// subsets-with-partitions of G x B; Rh values are classes (X, Pi, [f])
// taken up to independent left scaling on each block, so all Rh checks
// are performed classwise.
struct FlowAssignment {
  enum class Target { kSP, kRh };
  Target target = Target::kRh;
  std::vector<SPElement> sp;     // per state, when target == kSP
  std::vector<RhodesElement> rh;  // per state, when target == kRh

  // Informative generator-to-letter covering map, carried through the
  // file format and filled in by lift_flow_ev ("" covers by the identity).
  std::vector<std::pair<std::string, std::string>> covering;
};

// One failed check. condition is 1 (coverage), 2 (containment),
// 3 (block injectivity, including blockwise value consistency on Rh
// values) or 4 (cross-section); state/letter are -1 where they don't
// apply (coverage).
struct FlowFailure {
  int condition = 0;
  int state = -1;
  int letter = -1;
  std::string witness;
};

struct FlowVerification {
  bool passed = false;
  std::vector<FlowFailure> failures;
  std::size_t checks = 0;  // (state, letter) pairs examined, sink included

  // Transformation semigroup of the completed automaton.
  std::size_t automaton_ts_size = 0;
  bool automaton_aperiodic = false;

  // passed plus an aperiodic automaton: certifies complexity <= 1.
  bool aperiodic_flow() const { return passed && automaton_aperiodic; }
};

// Checks the complete-flow conditions of the assignment against the
// transformation semigroup (G x B, <letters>): every transition of the
// completion (sink included, its value the bottom) must satisfy
// containment and block injectivity, every point must be covered by some
// original state, and SP values must be cross-sections. letters[i] is the
// action of alphabet[i]; throws ValidationError on shape mismatches.
FlowVerification verify_flow(const Group& g,
                             const std::vector<RowMonomialElement>& letters,
                             const FlowAutomaton& aut,
                             const FlowAssignment& fa);

// Lifts a verified Rh-flow of (G x B, S) to one of (G x B^Ev, S^Ev): each
// state value grows to its clock closure (orbits of t, blockwise, with
// values constant along orbits), letter x is renamed to the one-shot
// generator h_x, and a new letter "t" acts as the identity on states.
// letter_src[i] is the source element index covered by alphabet[i]; the
// new letters are named like build_sev's generators, so the result can be
// verified directly against the enumerated S^Ev. Throws ValidationError
// if the input flow does not verify or is not Rh-valued.
std::pair<FlowAutomaton, FlowAssignment> lift_flow_ev(
    const Group& g, const std::vector<RowMonomialElement>& letters,
    const FlowAutomaton& aut, const FlowAssignment& fa,
    const EvGenerators& ev, const std::vector<int>& letter_src);

// Testing aid, not a decision procedure: exhaustive search for a complete
// Rh-flow with at most max_states states whose automaton is aperiodic.
// Enumerates every multiset of nonbottom Rhodes values up to the given
// size, then backtracks over the (usually forced) transition choices.
// Guarded by `enable` so nobody mistakes it for the real thing; node_cap
// bounds the backtracking.
struct FlowSearchResult {
  bool found = false;
  FlowAutomaton aut;
  FlowAssignment assignment;
};
FlowSearchResult find_small_flow(const Group& g,
                                 const std::vector<std::string>& letter_names,
                                 const std::vector<RowMonomialElement>& letters,
                                 int base_size, int max_states, bool enable,
                                 std::size_t node_cap = 200000);

// JSON round trip; see docs/formats.md for the shape. Reading validates
// names against the given group and base names.
std::string flow_to_json(const Group& g, const std::vector<std::string>& b_names,
                         const FlowAutomaton& aut, const FlowAssignment& fa);
std::pair<FlowAutomaton, FlowAssignment> flow_from_json(
    const Group& g, const std::vector<std::string>& b_names,
    const std::string& json_text);

}  // namespace smgkit
