#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "smgkit/errors.hpp"
#include "smgkit/ev_construction.hpp"
#include "smgkit/flows.hpp"
#include "smgkit/sp_lattice.hpp"

using namespace smgkit;
using namespace smgkit::testfix;

TEST_CASE("the two-state flow verifies and is aperiodic") {
  Built bu = build(toy_b2());
  FlowFixture f = toy_b2_flow();
  FlowVerification v = verify_flow(bu.d.group, bu.letters, f.aut, f.fa);
  CHECK(v.passed);
  CHECK(v.failures.empty());
  CHECK(v.checks > 0);
  CHECK(v.automaton_aperiodic);
  CHECK(v.automaton_ts_size == 3);  // two constant maps and the sink closure
  CHECK(v.aperiodic_flow());
}

TEST_CASE("the one-state flow on the smallest instance") {
  Built bu = build(toy_b1());
  FlowFixture f = toy_b1_flow();
  FlowVerification v = verify_flow(bu.d.group, bu.letters, f.aut, f.fa);
  CHECK(v.passed);
  CHECK(v.automaton_aperiodic);
}

TEST_CASE("shape validation rejects malformed flows") {
  Built bu = build(toy_b2());
  FlowFixture f = toy_b2_flow();
  SUBCASE("transition table with a bad state index") {
    f.aut.trans[0][0] = 7;
    CHECK_THROWS_AS(verify_flow(bu.d.group, bu.letters, f.aut, f.fa),
                    ValidationError);
  }
  SUBCASE("one value per state is required") {
    f.fa.rh.pop_back();
    CHECK_THROWS_AS(verify_flow(bu.d.group, bu.letters, f.aut, f.fa),
                    ValidationError);
  }
  SUBCASE("alphabet size must match the letter list") {
    f.aut.alphabet.pop_back();
    CHECK_THROWS_AS(verify_flow(bu.d.group, bu.letters, f.aut, f.fa),
                    ValidationError);
  }
}

TEST_CASE("a deleted transition yields a containment witness") {
  Built bu = build(toy_b2());
  FlowFixture f = toy_b2_flow();
  f.aut.trans[0][0] = -1;  // drop u1 . (a1,1,1)
  FlowVerification v = verify_flow(bu.d.group, bu.letters, f.aut, f.fa);
  CHECK_FALSE(v.passed);
  REQUIRE_FALSE(v.failures.empty());
  CHECK(v.failures[0].condition == 2);
  CHECK_FALSE(v.failures[0].witness.empty());
  CHECK(v.failures[0].state == 0);
  CHECK(v.failures[0].letter == 0);
}

TEST_CASE("coverage failures point at the uncovered base point") {
  Built bu = build(toy_b2());
  FlowFixture f = toy_b2_flow();
  // shrink u2's value away so base point 2 is never covered
  f.fa.rh[1] = f.fa.rh[0];
  FlowVerification v = verify_flow(bu.d.group, bu.letters, f.aut, f.fa);
  CHECK_FALSE(v.passed);
  bool cond1 = false;
  for (const FlowFailure& fl : v.failures) cond1 |= fl.condition == 1;
  CHECK(cond1);
}

TEST_CASE("lifting the flow to the grown semigroup") {
  Built bu = build(toy_b2());
  FlowFixture f = toy_b2_flow();
  EvGenerators ev = build_ev_generators(bu.s, bu.d.rees, 0);
  std::vector<int> letter_src;
  for (const auto& l : bu.letters) letter_src.push_back(bu.s.index_of(l));

  auto [up, ufa] = lift_flow_ev(bu.d.group, bu.letters, f.aut, f.fa, ev,
                                letter_src);
  REQUIRE(up.alphabet.size() == bu.letters.size() + 1);
  CHECK(up.alphabet[0] == "t");
  CHECK(up.states == f.aut.states);

  // the lifted alphabet acts by the clock letter plus the one-shots
  std::vector<RowMonomialElement> uplet;
  uplet.push_back(ev.t);
  for (int src : letter_src) {
    int pos = -1;
    for (size_t i = 0; i < ev.h_of.size(); ++i)
      if (ev.h_of[i] == src) pos = (int)i;
    REQUIRE(pos >= 0);
    uplet.push_back(ev.h[(size_t)pos]);
  }
  FlowVerification v = verify_flow(bu.d.group, uplet, up, ufa);
  CHECK(v.passed);
  CHECK(v.automaton_aperiodic);
  CHECK(v.automaton_ts_size == 4);  // the clock letter joins the closure
  CHECK(v.aperiodic_flow());

  // values inflate to full clock orbits of the base values
  for (size_t q = 0; q < ufa.rh.size(); ++q) {
    const RhodesElement& lifted = ufa.rh[q];
    const RhodesElement& basev = f.fa.rh[q];
    for (int bi = 0; bi < ev.n; ++bi)
      for (int k = 0; k <= ev.n; ++k)
        CHECK((lifted.block_of[(size_t)(k * ev.n + bi)] >= 0) ==
              (basev.block_of[(size_t)bi] >= 0));
  }

  SUBCASE("a corrupted clock value breaks the cross-section condition") {
    FlowAssignment bad = ufa;
    for (size_t i = 0; i < bad.rh[0].block_of.size(); ++i)
      if (bad.rh[0].block_of[i] >= 0 && (int)i >= ev.n) {
        bad.rh[0].value[i] = bu.d.group.mul(bad.rh[0].value[i], 1);
        break;
      }
    FlowVerification vb = verify_flow(bu.d.group, uplet, up, bad);
    CHECK_FALSE(vb.passed);
    REQUIRE_FALSE(vb.failures.empty());
    CHECK(vb.failures[0].condition == 3);
    CHECK(up.alphabet[(size_t)vb.failures[0].letter] == "t");
  }

  SUBCASE("lifting refuses a broken base flow") {
    FlowAutomaton broken = f.aut;
    broken.trans[0][0] = -1;
    CHECK_THROWS_AS(lift_flow_ev(bu.d.group, bu.letters, broken, f.fa, ev,
                                 letter_src),
                    ValidationError);
  }
}

TEST_CASE("subset-valued flows use the cross-section condition globally") {
  // express the same two-state flow with explicit labeled-point subsets
  Built bu = build(toy_b2());
  FlowFixture f = toy_b2_flow();
  FlowAssignment sp;
  sp.target = FlowAssignment::Target::kSP;
  for (const RhodesElement& r : f.fa.rh)
    sp.sp.push_back(rh_embed(bu.d.group, r));
  FlowVerification v = verify_flow(bu.d.group, bu.letters, f.aut, sp);
  CHECK(v.passed);

  // two labels over one base point in a single state break condition 4
  FlowAssignment bad = sp;
  bad.sp[0] = sp_from_blocks(4, {{0}, {2}});  // (1,1) and (-1,1) split
  FlowVerification vb = verify_flow(bu.d.group, bu.letters, f.aut, bad);
  CHECK_FALSE(vb.passed);
  bool cond4 = false;
  for (const FlowFailure& fl : vb.failures) cond4 |= fl.condition == 4;
  CHECK(cond4);
}

TEST_CASE("class-valued and saturated subset flows agree") {
  // a Rhodes value passes exactly when its saturation passes as a subset
  Built bu = build(toy_b2());
  FlowFixture f = toy_b2_flow();
  FlowAssignment sat;
  sat.target = FlowAssignment::Target::kSP;
  for (const RhodesElement& r : f.fa.rh)
    sat.sp.push_back(rh_saturate(bu.d.group, r));
  FlowVerification a = verify_flow(bu.d.group, bu.letters, f.aut, f.fa);
  FlowVerification b = verify_flow(bu.d.group, bu.letters, f.aut, sat);
  CHECK(a.passed == b.passed);

  // and a mutation breaks both the same way
  FlowAutomaton cut = f.aut;
  cut.trans[1][1] = -1;
  FlowAssignment sat2 = sat;
  FlowVerification am = verify_flow(bu.d.group, bu.letters, cut, f.fa);
  FlowVerification bm = verify_flow(bu.d.group, bu.letters, cut, sat2);
  CHECK_FALSE(am.passed);
  CHECK_FALSE(bm.passed);
  CHECK(am.failures[0].condition == bm.failures[0].condition);
}

TEST_CASE("flow json round trip") {
  Built bu = build(toy_b2());
  FlowFixture f = toy_b2_flow();
  std::string js = flow_to_json(bu.d.group, bu.d.b_names, f.aut, f.fa);
  auto [aut, fa] = flow_from_json(bu.d.group, bu.d.b_names, js);
  CHECK(aut.states == f.aut.states);
  CHECK(aut.alphabet == f.aut.alphabet);
  CHECK(aut.trans == f.aut.trans);
  REQUIRE(fa.rh.size() == f.fa.rh.size());
  for (size_t i = 0; i < fa.rh.size(); ++i) CHECK(fa.rh[i] == f.fa.rh[i]);
  FlowVerification v = verify_flow(bu.d.group, bu.letters, aut, fa);
  CHECK(v.passed);

  // unknown names are rejected
  CHECK_THROWS_AS(flow_from_json(bu.d.group, bu.d.b_names, "{"), ParseError);
  std::string broken = js;
  size_t pos = broken.find("\"u2\"");
  broken.replace(pos, 4, "\"u9\"");
  CHECK_THROWS_AS(flow_from_json(bu.d.group, bu.d.b_names, broken), Error);
}

TEST_CASE("search rediscovers the two-state flow") {
  Built bu = build(toy_b2());
  FlowSearchResult r =
      find_small_flow(bu.d.group, bu.names, bu.letters, 2, 2, true, 500000);
  REQUIRE(r.found);
  CHECK(r.aut.states.size() == 2);
  FlowVerification v = verify_flow(bu.d.group, bu.letters, r.aut, r.assignment);
  CHECK(v.passed);
  CHECK(v.automaton_aperiodic);
}

TEST_CASE("search caps and gating") {
  Built bu = build(toy_b2());
  CHECK_THROWS_AS(
      find_small_flow(bu.d.group, bu.names, bu.letters, 2, 2, false, 100),
      ValidationError);
  CHECK_THROWS_AS(
      find_small_flow(bu.d.group, bu.names, bu.letters, 2, 2, true, 1),
      CapExceededError);
}

TEST_CASE("no single-state flow covers the two-column instance") {
  // u1 alone would need a cross section of both columns surviving every
  // letter, which the rank-two matrix forbids
  Built bu = build(toy_b2());
  FlowSearchResult r =
      find_small_flow(bu.d.group, bu.names, bu.letters, 2, 1, true, 500000);
  CHECK_FALSE(r.found);
}
