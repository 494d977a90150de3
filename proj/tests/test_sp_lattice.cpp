#include <random>
#include <vector>

#include "doctest.h"
#include "smgkit/errors.hpp"
#include "smgkit/sp_lattice.hpp"

using namespace smgkit;

TEST_CASE("enumeration sizes follow the Bell numbers") {
  CHECK(enumerate_sp(0, 10).size() == 1);
  CHECK(enumerate_sp(1, 10).size() == 2);
  CHECK(enumerate_sp(2, 10).size() == 5);
  CHECK(enumerate_sp(3, 100).size() == 15);
  CHECK(enumerate_sp(4, 100).size() == 52);
  CHECK(enumerate_sp(5, 1000).size() == 203);
  CHECK_THROWS_AS(enumerate_sp(8, 100), CapExceededError);
}

TEST_CASE("lattice laws at four points, exhaustive") {
  std::vector<SPElement> all = enumerate_sp(4, 100);
  REQUIRE(all.size() == 52);

  for (const SPElement& p : all) {
    CHECK(sp_leq(p, p));
    CHECK(sp_leq(sp_bottom(4), p));
    CHECK(sp_leq(p, sp_top(4)));
    CHECK(sp_meet(p, p) == p);
    CHECK(sp_join(p, p) == p);
  }

  for (const SPElement& p : all)
    for (const SPElement& q : all) {
      SPElement m = sp_meet(p, q);
      SPElement j = sp_join(p, q);
      CHECK(m == sp_meet(q, p));
      CHECK(j == sp_join(q, p));
      CHECK(sp_leq(m, p));
      CHECK(sp_leq(m, q));
      CHECK(sp_leq(p, j));
      CHECK(sp_leq(q, j));

      // order characterizations
      bool le = sp_leq(p, q);
      CHECK(le == (m == p));
      CHECK(le == (sp_join(p, q) == q));
      if (le && sp_leq(q, p)) CHECK(p == q);

      // meet is the greatest lower bound, join the least upper bound
      for (const SPElement& r : all) {
        if (sp_leq(r, p) && sp_leq(r, q)) CHECK(sp_leq(r, m));
        if (sp_leq(p, r) && sp_leq(q, r)) CHECK(sp_leq(j, r));
      }
    }
}

TEST_CASE("order is transitive at three points") {
  std::vector<SPElement> all = enumerate_sp(3, 100);
  for (const SPElement& p : all)
    for (const SPElement& q : all)
      for (const SPElement& r : all)
        if (sp_leq(p, q) && sp_leq(q, r)) CHECK(sp_leq(p, r));
}

TEST_CASE("constructors and normalization") {
  SPElement s = sp_singleton(4, 2);
  CHECK(s.support_size() == 1);
  CHECK(s.block_count() == 1);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(0));

  SPElement f = sp_from_blocks(4, {{3, 1}, {0}});
  CHECK(f.support_size() == 3);
  CHECK(f.block_count() == 2);
  // blocks renumber in first-occurrence order regardless of input order
  CHECK(f.block_of[0] != f.block_of[1]);
  CHECK(f.block_of[1] == f.block_of[3]);
  CHECK_THROWS_AS(sp_from_blocks(4, {{0, 1}, {1, 2}}), ValidationError);

  SPElement e = f;
  sp_normalize(e);
  CHECK(e == f);

  CHECK(sp_bottom(4).empty());
  CHECK(sp_top(4).support_size() == 4);
  CHECK(sp_top(4).block_count() == 1);
}

TEST_CASE("cross sections and blockwise consistency") {
  // two points over base 2 with G of order 2: packed as g * 2 + b
  SPElement ok = sp_from_blocks(4, {{0, 1}});  // (1,1), (1,2)
  CHECK(is_cross_section(ok, 2));
  CHECK(sp_blocks_consistent(ok, 2));

  SPElement twice = sp_from_blocks(4, {{0, 2}});  // (1,1), (-1,1) together
  CHECK_FALSE(is_cross_section(twice, 2));
  CHECK_FALSE(sp_blocks_consistent(twice, 2));

  // same base point in two different blocks: consistent blockwise but
  // not a global cross section
  SPElement split = sp_from_blocks(4, {{0}, {2}});
  CHECK_FALSE(is_cross_section(split, 2));
  CHECK(sp_blocks_consistent(split, 2));
}

TEST_CASE("rhodes elements normalize to identity leaders") {
  Group g = Group::cyclic(4);
  RhodesElement r = rh_from_blocks(g, 3, {{2, 0}, {1}}, {{3, 1}, {2}});
  // the least point of each block carries the identity after rescaling
  CHECK(r.value[0] == g.identity());
  CHECK(r.value[1] == g.identity());
  // the relative offset inside the first block is preserved
  CHECK(r.value[2] == g.mul(3, g.inv(1)));
  CHECK_THROWS_AS(rh_from_blocks(g, 3, {{0, 1}, {1}}, {{0, 0}, {0}}),
                  ValidationError);
  CHECK(rh_bottom(3).empty());
}

TEST_CASE("embed and saturate round trip through rh_from_sp") {
  Group g = Group::cyclic(4);
  const int base = 4;
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    // random partial partition of the base with random values
    RhodesElement r;
    r.block_of.assign(base, -1);
    r.value.assign(base, -1);
    int nb = 1 + (int)(rng() % 3);
    for (int b = 0; b < base; ++b) {
      int pick = (int)(rng() % (nb + 1));
      if (pick < nb) {
        r.block_of[(size_t)b] = pick;
        r.value[(size_t)b] = (int)(rng() % g.order());
      }
    }
    rh_normalize(g, r);
    if (r.empty()) continue;

    SPElement emb = rh_embed(g, r);
    CHECK(emb.support_size() == r.base_size() - (int)std::count(
        r.block_of.begin(), r.block_of.end(), -1));
    CHECK(sp_blocks_consistent(emb, base));
    RhodesElement back = rh_from_sp(g, emb, base);
    CHECK(back == r);

    SPElement sat = rh_saturate(g, r);
    // saturation covers the whole group fiber over the support
    int covered = 0;
    for (int b = 0; b < base; ++b)
      if (r.contains(b)) covered += g.order();
    CHECK(sat.support_size() == covered);
    CHECK(sp_blocks_consistent(sat, base));
    CHECK(sp_leq(emb, sat));

    // saturation is G-invariant: left-translating all labels fixes it
    for (int h = 1; h < g.order(); ++h) {
      std::vector<std::vector<int>> blocks;
      for (const auto& blk : sat.blocks()) {
        std::vector<int> nb2;
        for (int p : blk)
          nb2.push_back(sp_point(g.mul(h, sp_point_group(p, base)),
                                 sp_point_base(p, base), base));
        blocks.push_back(std::move(nb2));
      }
      CHECK(sp_from_blocks(g.order() * base, blocks) == sat);
    }
  }
}

TEST_CASE("rh_from_sp rejects contradictory blocks") {
  Group g = Group::cyclic(2);
  SPElement twice = sp_from_blocks(4, {{0, 2}});
  CHECK_THROWS_AS(rh_from_sp(g, twice, 2), ValidationError);
}

TEST_CASE("formatting is stable") {
  Group g = Group::cyclic(2);
  std::vector<std::string> names{"1", "2"};
  SPElement p = sp_from_blocks(4, {{0, 1}, {3}});
  CHECK(sp_format(p, g, 2, names) == "[1.1, 1.2 | -1.2]");
  RhodesElement r = rh_from_blocks(g, 2, {{0, 1}}, {{0, 1}});
  CHECK(rh_format(r, g, names) == "[1:1, 2:-1]");
  CHECK(sp_format(sp_bottom(4), g, 2, names) == "[]");
}
