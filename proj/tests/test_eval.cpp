#include <map>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "smgkit/closure_relation.hpp"
#include "smgkit/errors.hpp"
#include "smgkit/ev_construction.hpp"
#include "smgkit/eval_ts.hpp"
#include "smgkit/flow_monoid.hpp"

using namespace smgkit;
using namespace smgkit::testfix;

namespace {

// b2's grown semigroup drives the full-engine cases: 4 labeled points
// at the source, 52 lattice elements.
struct SourceRig {
  Built bu;
  LatticeHandle lat;
  M0Result m0;
};

SourceRig b2_rig() {
  Built bu = build(toy_b2());
  LatticeHandle lat = LatticeHandle::build(bu.d.group, 2);
  M0Result m0 = enumerate_m0(lat, bu.letters, {});
  return SourceRig{std::move(bu), std::move(lat), std::move(m0)};
}

}  // namespace

TEST_CASE("boolean relation product and diagonal") {
  BoolRelation a(3), b(3);
  a.set(0, 1);
  a.set(1, 2);
  b.set(1, 1);
  b.set(2, 0);
  BoolRelation ab = a.product(b);
  CHECK(ab.get(0, 1));
  CHECK(ab.get(1, 0));
  CHECK_FALSE(ab.get(0, 0));
  CHECK(ab.pair_count() == 2);

  BoolRelation i = BoolRelation::identity(3);
  CHECK(i.is_diagonal());
  CHECK(i.product(a) == a);
  CHECK(a.product(i) == a);
  CHECK(BoolRelation::diagonal({1, 0, 1}).domain() ==
        std::vector<char>{1, 0, 1});
}

TEST_CASE("the lattice handle orders fifty-two elements") {
  SourceRig r = b2_rig();
  REQUIRE(r.lat.size() == 52);
  CHECK(r.lat.tabled);
  CHECK(r.lat.elems[(size_t)r.lat.top()] == sp_top(4));
  CHECK(r.lat.elems[(size_t)r.lat.bottom()] == sp_bottom(4));
  for (int i = 0; i < r.lat.size(); ++i) {
    CHECK(r.lat.index(r.lat.elems[(size_t)i]) == i);
    CHECK(r.lat.meet(i, r.lat.top()) == i);
    CHECK(r.lat.meet(i, r.lat.bottom()) == r.lat.bottom());
    CHECK(r.lat.leq(r.lat.bottom(), i));
  }
  // meet table against the structural meet
  for (int i = 0; i < r.lat.size(); ++i)
    for (int j = 0; j < r.lat.size(); ++j)
      CHECK(r.lat.elems[(size_t)r.lat.meet(i, j)] ==
            sp_meet(r.lat.elems[(size_t)i], r.lat.elems[(size_t)j]));
}

TEST_CASE("free flows are closure relations and obey transition witnesses") {
  SourceRig r = b2_rig();
  for (const RowMonomialElement& l : r.bu.letters) {
    BoolRelation f = free_flow(r.lat, l);
    ClosureCheck cc = closure_check(r.lat, f);
    CHECK(cc.ok);
    // membership agrees with the pairwise witness
    for (int y = 0; y < r.lat.size(); ++y)
      for (int z = 0; z < r.lat.size(); ++z) {
        bool stable = sp_transition_witness(r.bu.d.group, l,
                                            r.lat.elems[(size_t)y],
                                            r.lat.elems[(size_t)z])
                          .empty();
        CHECK(f.get(y, z) == stable);
      }
  }
  // a non-meet-closed relation is rejected with a witness
  BoolRelation bad(r.lat.size());
  bad.set(r.lat.top(), r.lat.top());
  int p1 = r.lat.point(sp_point(0, 0, 2));
  int p2 = r.lat.point(sp_point(0, 1, 2));
  bad.set(p1, r.lat.top());
  bad.set(p2, p2);
  ClosureCheck cc = closure_check(r.lat, bad);
  CHECK_FALSE(cc.ok);
  CHECK_FALSE(cc.witness.empty());
}

TEST_CASE("the flow monoid closes with the expected census") {
  SourceRig r = b2_rig();
  CHECK(r.m0.elems.size() == 324);
  CHECK(r.m0.rounds == 4);
  REQUIRE(r.m0.vacuum >= 0);

  const BoolRelation& v = r.m0.elems[(size_t)r.m0.vacuum];
  CHECK(v.product(v) == v);
  CHECK(v.is_diagonal());
  int vd = 0;
  for (char c : v.domain()) vd += c;
  CHECK(vd == 18);

  // every member is a closure relation
  for (const BoolRelation& f : r.m0.elems)
    CHECK(closure_check(r.lat, f).ok);

  // the identity sits at index zero and the letter flows are recorded
  CHECK(r.m0.elems[0] == BoolRelation::identity(r.lat.size()));
  REQUIRE(r.m0.letter_flow.size() == r.bu.letters.size());
  for (size_t i = 0; i < r.bu.letters.size(); ++i)
    CHECK(r.m0.elems[(size_t)r.m0.letter_flow[i]] ==
          free_flow(r.lat, r.bu.letters[i]));
}

TEST_CASE("sandwiching by the vacuum restricts to the stable domain") {
  SourceRig r = b2_rig();
  const BoolRelation& v = r.m0.elems[(size_t)r.m0.vacuum];
  std::vector<char> vd = v.domain();
  for (const BoolRelation& f : r.m0.elems) {
    BoolRelation vfv = v.product(f).product(v);
    BoolRelation cut(f.n);
    for (int p = 0; p < f.n; ++p) {
      if (!vd[(size_t)p]) continue;
      for (int q = 0; q < f.n; ++q)
        if (vd[(size_t)q] && f.get(p, q)) cut.set(p, q);
    }
    CHECK(vfv == cut);
  }
}

TEST_CASE("closure caps are honored") {
  SourceRig r = b2_rig();
  M0Caps caps;
  caps.max_elements = 10;
  CHECK_THROWS_AS(enumerate_m0(r.lat, r.bu.letters, caps), CapExceededError);
  caps.max_elements = 20000;
  caps.max_rounds = 1;
  CHECK_THROWS_AS(enumerate_m0(r.lat, r.bu.letters, caps), CapExceededError);
}

TEST_CASE("omega and loop powers") {
  SourceRig r = b2_rig();
  for (const BoolRelation& f : r.m0.elems) {
    BoolRelation w = omega_power(f);
    CHECK(w.product(w) == w);
    BoolRelation lp = loop_power(f);
    CHECK(lp == w.product(kleene_part(f)));
    // loop targets are self-stable for the body
    for (int l = 0; l < lp.n; ++l)
      for (int m = 0; m < lp.n; ++m)
        if (lp.get(l, m)) CHECK(f.get(m, m));
  }
  // back flow is the diagonal on left coordinates
  BoolRelation f = free_flow(r.lat, r.bu.letters[0]);
  BoolRelation bf = back_flow(f);
  CHECK(bf.is_diagonal());
  std::vector<char> lhs((size_t)f.n, 0);
  for (int y = 0; y < f.n; ++y)
    for (int z = 0; z < f.n; ++z)
      if (f.get(y, z)) lhs[(size_t)y] = 1;
  CHECK(bf.domain() == lhs);
}

TEST_CASE("forward tables agree with the pointwise construction") {
  SourceRig r = b2_rig();
  for (const RowMonomialElement& l : r.bu.letters) {
    std::vector<int> tab = forward_table(r.lat, free_flow(r.lat, l));
    for (int li = 0; li < r.lat.size(); ++li) {
      SPElement fwd = free_flow_forward(r.bu.d.group, l,
                                        r.lat.elems[(size_t)li]);
      REQUIRE(tab[(size_t)li] >= 0);  // free flows are total forward
      CHECK(r.lat.elems[(size_t)tab[(size_t)li]] == fwd);
    }
  }
}

TEST_CASE("the least letter-stable element is the forced closure") {
  SourceRig r = b2_rig();
  for (const RowMonomialElement& l : r.bu.letters) {
    for (int li = 0; li < r.lat.size(); ++li) {
      SPElement st = least_letter_stable(r.bu.d.group, l,
                                         r.lat.elems[(size_t)li]);
      // stable and above the seed
      CHECK(sp_transition_witness(r.bu.d.group, l, st, st).empty());
      CHECK(sp_leq(r.lat.elems[(size_t)li], st));
      // least: no stable element sits strictly between
      for (int m = 0; m < r.lat.size(); ++m) {
        const SPElement& cand = r.lat.elems[(size_t)m];
        if (!sp_leq(r.lat.elems[(size_t)li], cand)) continue;
        if (!sp_transition_witness(r.bu.d.group, l, cand, cand).empty())
          continue;
        CHECK(sp_leq(st, cand));
      }
    }
  }
}

TEST_CASE("evaluation states and maps of the source instance") {
  SourceRig r = b2_rig();
  EvalReport rep = build_eval_ts(r.lat, r.bu.letters, {});
  CHECK(rep.lattice_size == 52);
  CHECK(rep.m0_size == 324);
  CHECK(rep.vacuum_domain_size == 18);
  CHECK(rep.states == 7);
  CHECK(rep.eval_size == 12);
  CHECK(rep.points_in_vacuum);
  CHECK_FALSE(rep.contradiction);
  CHECK(rep.contradiction_witness.empty());
  REQUIRE(rep.state_elems.size() == 7);
  REQUIRE(rep.eval_maps.size() == 12);
  REQUIRE(rep.map_of_m0.size() == 324);

  // states are stable under every evaluation map
  for (const std::vector<int>& em : rep.eval_maps) {
    REQUIRE(em.size() == 7);
    for (int img : em) CHECK(img >= -1);
  }

  // the map family is closed under composition: maps of products match
  // map composition with the sink absorbing
  for (size_t x = 0; x < 40; ++x)
    for (size_t y = 0; y < 40; ++y) {
      const BoolRelation p = r.m0.elems[x].product(r.m0.elems[y]);
      // p is in the monoid; find it
      int pi = -1;
      for (size_t k = 0; k < r.m0.elems.size(); ++k)
        if (r.m0.elems[k] == p) {
          pi = (int)k;
          break;
        }
      REQUIRE(pi >= 0);
      const auto& fx = rep.eval_maps[(size_t)rep.map_of_m0[x]];
      const auto& fy = rep.eval_maps[(size_t)rep.map_of_m0[y]];
      const auto& fp = rep.eval_maps[(size_t)rep.map_of_m0[(size_t)pi]];
      for (int q = 0; q < rep.states; ++q) {
        int mid = fx[(size_t)q];
        int got = mid < 0 ? -1 : fy[(size_t)mid];
        CHECK(got == fp[(size_t)q]);
      }
    }
}

TEST_CASE("a contradictory instance is reported as such") {
  // a twisted swap against a plain fold forces one block to assert two
  // group values over one base point
  Group z2 = Group::cyclic(2);
  std::vector<RowMonomialElement> letters{
      RowMonomialElement{{1, 0}, {0, 1}},  // swap, -1 on the way back
      RowMonomialElement{{0, 0}, {0, 0}},  // fold onto the first point
  };
  LatticeHandle lat = LatticeHandle::build(z2, 2);
  EvalReport rep = build_eval_ts(lat, letters, {});
  CHECK(rep.m0_size == 1514);
  CHECK(rep.states == 7);
  CHECK(rep.eval_size == 17);
  CHECK(rep.contradiction);
  CHECK(rep.contradiction_witness.find("two labels over one base point") !=
        std::string::npos);
}

TEST_CASE("well-formed formulas interpret into the closed monoid") {
  SourceRig r = b2_rig();
  const BoolRelation& v = r.m0.elems[(size_t)r.m0.vacuum];

  WFF empty = WFF::empty();
  CHECK(interpret_wff(r.m0, empty) == v);

  for (size_t x = 0; x < r.bu.letters.size(); ++x) {
    WFF w = WFF::of_letter((int)x);
    BoolRelation direct = v.product(
        r.m0.elems[(size_t)r.m0.letter_flow[x]]).product(v);
    CHECK(interpret_wff(r.m0, w) == direct);
  }

  // concatenation multiplies the interpretations
  WFF cat = WFF::concat({WFF::of_letter(0), WFF::of_letter(4)});
  BoolRelation lhs = interpret_wff(r.m0, cat);
  BoolRelation rhs =
      interpret_wff(r.m0, WFF::of_letter(0)).product(
          interpret_wff(r.m0, WFF::of_letter(4)));
  CHECK(lhs == rhs);

  // loops land on the omega-plus-kleene power of the sandwiched body
  WFF lp = WFF::loop(WFF::of_letter(1));
  CHECK(interpret_wff(r.m0, lp) ==
        loop_power(interpret_wff(r.m0, WFF::of_letter(1))));
}

TEST_CASE("primitive roots strip proper powers") {
  CHECK(primitive_root({1, 2, 1, 2}) == std::vector<int>{1, 2});
  CHECK(primitive_root({3, 3, 3}) == std::vector<int>{3});
  CHECK(primitive_root({1, 2, 3}) == std::vector<int>{1, 2, 3});
  CHECK(primitive_root({}) == std::vector<int>{});
}

TEST_CASE("formula-mode embedding on every bundled instance") {
  for (const SemigroupDescription& d :
       {toy_b1(), toy_b2(), toy_b3(), small_c2(), mtf()}) {
    Built bu = build(d);
    EmbedReport rep = embed_check_formula(bu.s, d.rees, 0);
    INFO(d.name, ": ", rep.failure);
    CHECK(rep.ok);
    CHECK(rep.mode == "formula");
    CHECK(rep.elements == bu.s.size());
    CHECK(rep.points == bu.s.group().order() * bu.s.base_size());

    // the recorded action is the original one
    for (int x = 0; x < bu.s.size(); ++x)
      for (int p = 0; p < rep.points; ++p) {
        auto img = rm_act(bu.s.group(), p / bu.s.base_size(),
                          p % bu.s.base_size(), bu.s.elem(x));
        int want = img ? img->first * bu.s.base_size() + img->second : -1;
        CHECK(rep.action[(size_t)x][(size_t)p] == want);
      }
  }
}

TEST_CASE("full-mode embedding agrees with the formulas on the smallest case") {
  Built bu = build(toy_b1());
  EmbedReport formula = embed_check_formula(bu.s, bu.d.rees, 0);
  EmbedReport full = embed_check_full(bu.s, bu.d.rees, 0);
  CHECK(formula.ok);
  CHECK(full.ok);
  CHECK(full.mode == "full");
  CHECK(full.eval.lattice_size == 52);
  CHECK(full.eval.m0_size == 273);
  CHECK(full.eval.vacuum_domain_size == 44);
  CHECK(full.eval.states == 10);
  CHECK(full.eval.eval_size == 30);
  CHECK_FALSE(full.eval.contradiction);
  std::string witness;
  CHECK(embed_reports_agree(formula, full, &witness));
  CHECK(witness.empty());
}
