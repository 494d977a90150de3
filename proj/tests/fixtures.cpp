#include "fixtures.hpp"

#include "smgkit/sp_lattice.hpp"

namespace smgkit::testfix {

SemigroupDescription mtf() {
  SemigroupDescription d;
  d.name = "mtf";
  d.group = Group::cyclic(2);
  d.b_names = {"1'", "3'", "1", "2", "3", "4"};
  d.has_rees = true;
  d.rees.group = d.group;
  d.rees.a_names = {"a1", "a2", "a3", "a4", "a5", "a6", "a7"};
  d.rees.b_names = d.b_names;
  d.rees.c_t = {{0, 0, -1, -1, -1, -1},  //
                {0, -1, -1, -1, -1, -1},
                {-1, 0, -1, -1, -1, -1},
                {-1, -1, 0, 0, -1, -1},
                {-1, -1, -1, 0, 0, -1},
                {-1, -1, -1, -1, 0, 0},
                {-1, -1, 0, -1, -1, 0}};
  d.all_ideal_generators = true;
  d.ideal_zero_generator = true;
  RowMonomialElement sigma{{1, 0, 3, 4, 5, 2}, {0, 0, 0, 0, 0, 0}};
  RowMonomialElement r{{2, 4, -1, -1, -1, -1}, {0, 1, 0, 0, 0, 0}};
  d.extra_generators = {{"sigma", sigma}, {"r", r}};
  d.monoid = true;
  return d;
}

SemigroupDescription toy_b1() {
  SemigroupDescription d;
  d.name = "toy_b1";
  d.group = Group::cyclic(2);
  d.b_names = {"1"};
  d.has_rees = true;
  d.rees.group = d.group;
  d.rees.a_names = {"a"};
  d.rees.b_names = d.b_names;
  d.rees.c_t = {{0}};
  d.all_ideal_generators = true;
  d.ideal_zero_generator = true;
  return d;
}

SemigroupDescription toy_b2() {
  SemigroupDescription d;
  d.name = "toy_b2";
  d.group = Group::cyclic(2);
  d.b_names = {"1", "2"};
  d.has_rees = true;
  d.rees.group = d.group;
  d.rees.a_names = {"a1", "a2"};
  d.rees.b_names = d.b_names;
  d.rees.c_t = {{0, 0}, {0, 1}};
  d.all_ideal_generators = true;
  d.ideal_zero_generator = true;
  return d;
}

SemigroupDescription toy_b3() {
  SemigroupDescription d;
  d.name = "toy_b3";
  d.group = Group::cyclic(2);
  d.b_names = {"1", "2", "3"};
  d.has_rees = true;
  d.rees.group = d.group;
  d.rees.a_names = {"a1", "a2", "a3", "a4", "a5",
                    "a6", "a7", "a8", "a9", "a10"};
  d.rees.b_names = d.b_names;
  d.rees.c_t = {{0, 0, 0},   //
                {-1, 0, 1},  //
                {0, 1, -1},  //
                {0, -1, 1},  //
                {0, -1, -1}, //
                {-1, 0, -1}, //
                {-1, -1, 0}, //
                {0, -1, 0},  //
                {-1, 0, 0},  //
                {0, 0, -1}};
  d.all_ideal_generators = true;
  d.ideal_zero_generator = true;
  RowMonomialElement sigma{{1, 2, 0}, {0, 0, 0}};
  RowMonomialElement r{{1, -1, 0}, {0, 0, 1}};
  d.extra_generators = {{"s", sigma}, {"r", r}};
  d.monoid = true;
  return d;
}

SemigroupDescription small_c2() {
  SemigroupDescription d = toy_b2();
  d.name = "small_c2";
  RowMonomialElement tau{{1, 0}, {0, 0}};
  d.extra_generators = {{"tau", tau}};
  d.monoid = true;
  return d;
}

ReesStructure colpair_rees() {
  return ReesStructure{Group::cyclic(2), {"a"}, {"1", "2"}, {{0, 0}}};
}

FlowFixture toy_b2_flow() {
  Built bu = build(toy_b2());
  FlowFixture out;
  out.aut.states = {"u1", "u2"};
  out.aut.alphabet = bu.names;
  out.aut.trans.assign(2, std::vector<int>(bu.letters.size(), -1));
  for (size_t x = 0; x < bu.letters.size(); ++x) {
    if (bu.names[x] == "0") continue;
    int tgt = bu.letters[x].dest[0];  // triples are constant on columns
    out.aut.trans[0][x] = tgt;
    out.aut.trans[1][x] = tgt;
  }
  Group g = bu.d.group;
  out.fa.target = FlowAssignment::Target::kRh;
  out.fa.rh.push_back(rh_from_blocks(g, 2, {{0}}, {{g.identity()}}));
  out.fa.rh.push_back(rh_from_blocks(g, 2, {{1}}, {{g.identity()}}));
  return out;
}

FlowFixture toy_b1_flow() {
  Built bu = build(toy_b1());
  FlowFixture out;
  out.aut.states = {"u1"};
  out.aut.alphabet = bu.names;
  out.aut.trans.assign(1, std::vector<int>(bu.letters.size(), -1));
  for (size_t x = 0; x < bu.letters.size(); ++x)
    if (bu.names[x] != "0") out.aut.trans[0][x] = 0;
  Group g = bu.d.group;
  out.fa.target = FlowAssignment::Target::kRh;
  out.fa.rh.push_back(rh_from_blocks(g, 1, {{0}}, {{g.identity()}}));
  return out;
}

Built build(const SemigroupDescription& d, std::size_t cap) {
  auto gens = description_generators(d);
  Built out{d,
            EnumeratedSemigroup::enumerate(
                d.group, static_cast<int>(d.b_names.size()), gens, cap),
            {},
            {}};
  for (auto& [n, e] : gens) {
    out.names.push_back(n);
    out.letters.push_back(e);
  }
  return out;
}

}  // namespace smgkit::testfix
