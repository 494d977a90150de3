#include "smgkit/ev_construction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

#include "smgkit/errors.hpp"
#include "smgkit/green.hpp"

namespace smgkit {

namespace {

std::string point_name(int bi, int j) {
  return "(" + std::to_string(bi + 1) + "," + std::to_string(j) + ")";
}

}  // namespace

EvGenerators build_ev_generators(const EnumeratedSemigroup& s,
                                 const ReesStructure& rs, int a0,
                                 const std::vector<int>& restrict_to) {
  const int n = s.base_size();
  if (rs.num_b() != n)
    throw ValidationError("structure matrix base does not match the semigroup");
  if (a0 < 0 || a0 >= rs.num_a())
    throw ValidationError("distinguished column out of range");
  if (rs.c(0, a0) != 0)
    throw ValidationError(
        "unnormalized structure matrix: the distinguished column must carry "
        "the identity at the first base point, got " +
        (rs.c(0, a0) < 0 ? std::string("0")
                         : rs.group.name(rs.c(0, a0))));
  for (int b = 0; b < n; ++b) {
    int e = rs.c(b, a0);
    if (e > 0)
      throw ValidationError("unnormalized structure matrix: entry " +
                            rs.group.name(e) + " at " + rs.b_names[b] +
                            " in column " + rs.a_names[a0]);
  }

  EvGenerators ev;
  ev.group = s.group();
  ev.n = n;
  ev.ev_base = n * (n + 1);
  ev.b_ev_names.resize(static_cast<size_t>(ev.ev_base));
  for (int idx = 0; idx < ev.ev_base; ++idx) {
    auto [bi, j] = ev.ev_point(idx);
    ev.b_ev_names[static_cast<size_t>(idx)] = point_name(bi, j);
  }

  ev.t = rm_identity(ev.group, ev.ev_base);
  for (int idx = 0; idx < ev.ev_base; ++idx) {
    auto [bi, j] = ev.ev_point(idx);
    ev.t.dest[static_cast<size_t>(idx)] = ev.ev_index(bi, (j + 1) % (n + 1));
  }

  std::vector<int> xs = restrict_to;
  if (xs.empty()) {
    xs.resize(static_cast<size_t>(s.size()));
    std::iota(xs.begin(), xs.end(), 0);
  }
  for (int x : xs) {
    const RowMonomialElement& e = s.elem(x);
    RowMonomialElement hx = rm_zero(ev.ev_base);
    for (int bi = 0; bi < n; ++bi) {
      if (e.dest[static_cast<size_t>(bi)] < 0) continue;
      hx.dest[static_cast<size_t>(bi)] =
          ev.ev_index(e.dest[static_cast<size_t>(bi)], 0);
      hx.label[static_cast<size_t>(bi)] = e.label[static_cast<size_t>(bi)];
    }
    ev.h.push_back(std::move(hx));
    ev.h_of.push_back(x);
  }
  return ev;
}

EnumeratedSemigroup build_sev(const EvGenerators& ev, std::size_t cap) {
  std::vector<std::pair<std::string, RowMonomialElement>> gens;
  gens.emplace_back("t", ev.t);
  for (size_t i = 0; i < ev.h.size(); ++i)
    gens.emplace_back("h" + std::to_string(ev.h_of[i]), ev.h[i]);
  return EnumeratedSemigroup::enumerate(ev.group, ev.ev_base, std::move(gens),
                                        cap);
}

std::vector<int> canonical_kernel(const Group& g, const RowMonomialElement& e) {
  std::vector<int> val(e.dest.size(), -1);
  int p0 = -1;
  for (int p = 0; p < e.base_size(); ++p) {
    if (!e.defined_at(p)) continue;
    if (p0 < 0)
      p0 = p;
    else if (e.dest[static_cast<size_t>(p)] != e.dest[static_cast<size_t>(p0)])
      throw ConsistencyError("canonical_kernel: edges do not share one target");
    val[static_cast<size_t>(p)] = g.mul(e.label[static_cast<size_t>(p0)],
                                        g.inv(e.label[static_cast<size_t>(p)]));
  }
  return val;
}

EvPropertyReport verify_ev_properties(const EnumeratedSemigroup& s,
                                      const ReesStructure& rs, int a0,
                                      const EvGenerators& ev,
                                      const EnumeratedSemigroup& sev) {
  EvPropertyReport rep;
  const Group& g = ev.group;
  const int n = ev.n;
  GreenData gd = green_data(sev);

  auto fail = [&rep](const std::string& msg) {
    if (rep.failure.empty()) rep.failure = msg;
  };

  const int id = sev.identity_index();
  const int t_idx = sev.generator(0);
  {
    bool ok = id >= 0;
    std::set<int> powers;
    if (ok) {
      int p = id;
      for (int k = 0; k <= n; ++k) {
        powers.insert(p);
        p = sev.mul(p, t_idx);
      }
      ok = p == id && static_cast<int>(powers.size()) == n + 1;
    }
    if (ok) {
      const auto& u = gd.h_members[static_cast<size_t>(gd.h_of[static_cast<size_t>(id)])];
      ok = std::set<int>(u.begin(), u.end()) == powers;
    }
    rep.units_cyclic = ok;
    if (!ok) fail("the unit group is not the cyclic group generated by t");
  }

  {
    bool ok = true;
    for (int idx = 0; idx < ev.ev_base && ok; ++idx) {
      if (ev.t.label[static_cast<size_t>(idx)] != 0) ok = false;
      int d = ev.t.dest[static_cast<size_t>(idx)];
      if (d < 0 || d % n != idx % n) ok = false;
    }
    for (int bi = 0; bi < n && ok; ++bi) {
      std::set<int> seen;
      int p = bi;
      for (int k = 0; k <= n; ++k) {
        seen.insert(p);
        p = ev.t.dest[static_cast<size_t>(p)];
      }
      ok = p == bi && static_cast<int>(seen.size()) == n + 1;
    }
    rep.orbit_structure = ok;
    if (!ok) fail("t does not rotate each row of the extended base freely");
  }

  {
    bool per_orbit = true, disjoint = true, placed = true;
    for (const auto& hx : ev.h) {
      std::set<int> rows, dom, im;
      for (int idx = 0; idx < ev.ev_base; ++idx) {
        if (!hx.defined_at(idx)) continue;
        dom.insert(idx);
        im.insert(hx.dest[static_cast<size_t>(idx)]);
        if (!rows.insert(idx % n).second) per_orbit = false;
        if (ev.block_of(idx) != 0) placed = false;
        if (ev.ev_point(hx.dest[static_cast<size_t>(idx)]).second != 0)
          placed = false;
      }
      for (int p : dom)
        if (im.count(p)) disjoint = false;
    }
    rep.h_per_orbit = per_orbit;
    rep.dom_im_disjoint = disjoint;
    rep.dom_b0_im_r0 = placed;
    if (!per_orbit) fail("some h meets an orbit of t twice");
    if (!disjoint) fail("some h has overlapping domain and image");
    if (!placed) fail("some h leaves the diagonal block or the zero clock");
  }

  {
    bool ok = true;
    for (int idx = 0; idx < ev.ev_base && ok; ++idx) {
      int d = ev.t.dest[static_cast<size_t>(idx)];
      if (ev.block_of(d) != (ev.block_of(idx) + 1) % (n + 1)) ok = false;
      if (ev.ev_point(d).second != (ev.ev_point(idx).second + 1) % (n + 1))
        ok = false;
    }
    rep.block_shift = ok;
    if (!ok) fail("t does not shift the two block systems by one step");
  }

  {
    const int points = g.order() * ev.ev_base;
    auto node = [&](int gi, int idx) { return gi * ev.ev_base + idx; };
    std::vector<std::vector<int>> fwd(static_cast<size_t>(points)),
        rev(static_cast<size_t>(points));
    for (int gi = 0; gi < g.order(); ++gi)
      for (int idx = 0; idx < ev.ev_base; ++idx) {
        auto add = [&](const RowMonomialElement& f) {
          auto r = rm_act(g, gi, idx, f);
          if (!r) return;
          fwd[static_cast<size_t>(node(gi, idx))].push_back(
              node(r->first, r->second));
          rev[static_cast<size_t>(node(r->first, r->second))].push_back(
              node(gi, idx));
        };
        add(ev.t);
        for (const auto& hx : ev.h) add(hx);
      }
    auto covers = [&](const std::vector<std::vector<int>>& adj) {
      std::vector<char> vis(static_cast<size_t>(points), 0);
      std::queue<int> q;
      q.push(0);
      vis[0] = 1;
      int cnt = 1;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[static_cast<size_t>(u)])
          if (!vis[static_cast<size_t>(v)]) {
            vis[static_cast<size_t>(v)] = 1;
            ++cnt;
            q.push(v);
          }
      }
      return cnt == points;
    };
    rep.transitive = covers(fwd) && covers(rev);
    if (!rep.transitive)
      fail("the action on the labeled extended base is not transitive");
  }

  {
    ZeroMinimalIdeal zmi = zero_minimal_ideal(sev, gd);
    const int zero = sev.zero_index();
    const int idj = zmi.j_class;
    const int uj = id >= 0 ? gd.j_of[static_cast<size_t>(id)] : -1;
    const int zj = zero >= 0 ? gd.j_of[static_cast<size_t>(zero)] : -1;
    bool ok = zmi.zero_simple;
    std::vector<int> middle;
    for (int x = 0; x < sev.size(); ++x) {
      int jx = gd.j_of[static_cast<size_t>(x)];
      if (jx != uj && jx != idj && jx != zj) middle.push_back(x);
    }
    // Factors inside the ideal are absorbed; only products of two middle
    // elements could escape downward closure.
    for (size_t i = 0; i < middle.size() && ok; ++i)
      for (size_t k = 0; k < middle.size(); ++k) {
        int p = sev.mul(middle[i], middle[k]);
        if (p != zero && gd.j_of[static_cast<size_t>(p)] != idj) {
          ok = false;
          break;
        }
      }
    rep.nonunit_ideal_squared = ok;
    if (!ok) fail("the non-units squared do not fill the 0-minimal ideal");
  }

  {
    std::vector<int> hpos(static_cast<size_t>(s.size()), -1);
    for (size_t i = 0; i < ev.h_of.size(); ++i)
      hpos[static_cast<size_t>(ev.h_of[i])] = static_cast<int>(i);
    bool ok = true;
    std::vector<int> phi(static_cast<size_t>(g.order()), -1);
    for (int gi = 0; gi < g.order() && ok; ++gi) {
      int xg = s.index_of(rees_triple_element(rs, ReesTriple{a0, gi, 0}));
      if (xg < 0 || hpos[static_cast<size_t>(xg)] < 0) {
        ok = false;
        break;
      }
      int hx = sev.index_of(ev.h[static_cast<size_t>(hpos[static_cast<size_t>(xg)])]);
      if (hx < 0) {
        ok = false;
        break;
      }
      phi[static_cast<size_t>(gi)] = sev.mul(hx, t_idx);
    }
    if (ok) {
      int e0 = phi[0];
      ok = sev.is_idempotent(e0);
      const auto& hm =
          gd.h_members[static_cast<size_t>(gd.h_of[static_cast<size_t>(e0)])];
      ok = ok && std::set<int>(hm.begin(), hm.end()) ==
                     std::set<int>(phi.begin(), phi.end()) &&
           static_cast<int>(hm.size()) == g.order();
      for (int x = 0; x < g.order() && ok; ++x)
        for (int y = 0; y < g.order(); ++y)
          if (sev.mul(phi[static_cast<size_t>(x)],
                      phi[static_cast<size_t>(y)]) !=
              phi[static_cast<size_t>(g.mul(x, y))] ) {
            ok = false;
            break;
          }
      if (ok) {
        MaximalSubgroup ms =
            maximal_subgroup(sev, gd, gd.h_of[static_cast<size_t>(e0)]);
        ok = groups_isomorphic(ms.group, g);
      }
    }
    rep.max_subgroup_is_g = ok;
    if (!ok) fail("the base maximal subgroup does not copy the group");
  }

  return rep;
}

EvCrossSections ev_cross_sections(const EnumeratedSemigroup& s,
                                  const EnumeratedSemigroup& sev,
                                  const EvGenerators& ev) {
  const Group& g = ev.group;
  const int n = ev.n;

  // Which source elements lie in the 0-minimal ideal: their classes come
  // from columns of the structure matrix, everything else is a composite.
  std::vector<char> in_ideal(static_cast<size_t>(s.size()), 0);
  {
    GreenData gs = green_data(s);
    try {
      ZeroMinimalIdeal zs = zero_minimal_ideal(s, gs);
      for (int x : zs.nonzero) in_ideal[static_cast<size_t>(x)] = 1;
    } catch (const ValidationError&) {
      // No unique 0-minimal ideal in the source: tag everything composite.
    }
  }

  std::map<std::vector<int>, EvCrossSection::Origin> classes;
  for (int x = 0; x < s.size(); ++x) {
    const RowMonomialElement& e = s.elem(x);
    for (int l = 0; l < n; ++l) {
      std::vector<int> val(static_cast<size_t>(n), -1);
      int bi0 = -1;
      for (int bi = 0; bi < n; ++bi) {
        if (e.dest[static_cast<size_t>(bi)] != l) continue;
        if (bi0 < 0) bi0 = bi;
        val[static_cast<size_t>(bi)] =
            g.mul(e.label[static_cast<size_t>(bi0)],
                  g.inv(e.label[static_cast<size_t>(bi)]));
      }
      if (bi0 < 0) continue;
      auto origin = in_ideal[static_cast<size_t>(x)]
                        ? EvCrossSection::Origin::kIdealColumn
                        : EvCrossSection::Origin::kComposite;
      auto [it, fresh] = classes.emplace(std::move(val), origin);
      if (!fresh && origin == EvCrossSection::Origin::kIdealColumn)
        it->second = origin;
    }
  }

  EvCrossSections out;
  for (const auto& [val, origin] : classes)
    out.a0.push_back(EvCrossSection{0, val, origin});
  auto key = [](const EvCrossSection& c) {
    std::pair<std::vector<int>, std::vector<int>> k;
    for (size_t i = 0; i < c.val.size(); ++i)
      if (c.val[i] >= 0) {
        k.first.push_back(static_cast<int>(i));
        k.second.push_back(c.val[i]);
      }
    return k;
  };
  std::sort(out.a0.begin(), out.a0.end(),
            [&](const EvCrossSection& x, const EvCrossSection& y) {
              return key(x) < key(y);
            });
  out.per_block = static_cast<int>(out.a0.size());
  for (int k = 0; k <= n; ++k)
    for (EvCrossSection c : out.a0) {
      c.block = k;
      out.all.push_back(std::move(c));
    }

  // Cross-check against the enumerated extension: its nonzero ideal must
  // have exactly these classes, one per kernel.
  GreenData gd = green_data(sev);
  ZeroMinimalIdeal zmi = zero_minimal_ideal(sev, gd);
  std::set<int> r_classes;
  std::set<std::pair<int, std::vector<int>>> actual;
  for (int x : zmi.nonzero) {
    if (!r_classes.insert(gd.r_of[static_cast<size_t>(x)]).second) continue;
    std::vector<int> ck = canonical_kernel(g, sev.elem(x));
    int blk = -1;
    std::vector<int> val(static_cast<size_t>(n), -1);
    for (int idx = 0; idx < ev.ev_base; ++idx) {
      if (ck[static_cast<size_t>(idx)] < 0) continue;
      if (blk < 0)
        blk = ev.block_of(idx);
      else if (ev.block_of(idx) != blk)
        throw ConsistencyError("an ideal kernel crosses block boundaries");
      val[static_cast<size_t>(idx % n)] = ck[static_cast<size_t>(idx)];
    }
    if (blk < 0) throw ConsistencyError("the zero element entered the ideal");
    actual.insert({blk, std::move(val)});
  }
  std::set<std::pair<int, std::vector<int>>> predicted;
  for (const auto& c : out.all) predicted.insert({c.block, c.val});
  if (actual.size() != r_classes.size() || actual != predicted)
    throw ConsistencyError(
        "classes of the extension ideal disagree with the computed family (" +
        std::to_string(r_classes.size()) + " classes enumerated, " +
        std::to_string(predicted.size()) + " computed)");

  return out;
}

EvStructureMatrix ev_structure_matrix(const EnumeratedSemigroup& s,
                                      const ReesStructure& rs, int a0,
                                      const EvGenerators& ev,
                                      const EnumeratedSemigroup& sev,
                                      const EvCrossSections& cs) {
  const Group& g = ev.group;
  const int n = ev.n;
  const int m = cs.per_block;
  GreenData gd = green_data(sev);
  ZeroMinimalIdeal zmi = zero_minimal_ideal(sev, gd);
  EvStructureMatrix out;

  std::vector<int> hpos(static_cast<size_t>(s.size()), -1);
  for (size_t i = 0; i < ev.h_of.size(); ++i)
    hpos[static_cast<size_t>(ev.h_of[i])] = static_cast<int>(i);

  // Column-image representatives: h for the distinguished column's triple
  // at i puts the image at (i, 0), and each clock tick moves it one step.
  const int t_idx = sev.generator(0);
  out.l_rep.assign(static_cast<size_t>(ev.ev_base), -1);
  for (int bi = 0; bi < n; ++bi) {
    int xi = s.index_of(rees_triple_element(rs, ReesTriple{a0, 0, bi}));
    if (xi < 0 || hpos[static_cast<size_t>(xi)] < 0)
      throw ConsistencyError("distinguished column misses base point " +
                             rs.b_names[static_cast<size_t>(bi)]);
    int cur =
        sev.index_of(ev.h[static_cast<size_t>(hpos[static_cast<size_t>(xi)])]);
    if (cur < 0)
      throw ConsistencyError("generator missing from the enumerated extension");
    for (int j = 0; j <= n; ++j) {
      int row = ev.ev_index(bi, j);
      out.l_rep[static_cast<size_t>(row)] = cur;
      const RowMonomialElement& e = sev.elem(cur);
      for (int idx = 0; idx < ev.ev_base; ++idx)
        if (e.defined_at(idx) && e.dest[static_cast<size_t>(idx)] != row)
          throw ConsistencyError("image representative misses its point " +
                                 ev.b_ev_names[static_cast<size_t>(row)]);
      cur = sev.mul(cur, t_idx);
    }
  }

  const int anchor = ev.ev_index(0, 1);
  out.e0 = out.l_rep[static_cast<size_t>(anchor)];
  if (!sev.is_idempotent(out.e0))
    throw ConsistencyError("the base element of the extension ideal is not "
                           "idempotent");

  out.r_rep.assign(static_cast<size_t>((n + 1) * m), -1);
  for (int col = 0; col < (n + 1) * m; ++col) {
    const EvCrossSection& c = cs.all[static_cast<size_t>(col)];
    RowMonomialElement q = rm_zero(ev.ev_base);
    for (int bi = 0; bi < n; ++bi) {
      if (c.val[static_cast<size_t>(bi)] < 0) continue;
      int idx = c.block * n + bi;
      q.dest[static_cast<size_t>(idx)] = anchor;
      q.label[static_cast<size_t>(idx)] = g.inv(c.val[static_cast<size_t>(bi)]);
    }
    out.r_rep[static_cast<size_t>(col)] = sev.index_of(q);
    if (out.r_rep[static_cast<size_t>(col)] < 0)
      throw ConsistencyError("kernel representative missing from the "
                             "enumerated extension");
  }

  out.c0.group = g;
  out.c0.b_names = rs.b_names;
  out.c0.c_t.assign(static_cast<size_t>(m),
                    std::vector<int>(static_cast<size_t>(n), -1));
  for (int j = 0; j < m; ++j) {
    out.c0.a_names.push_back("A" + std::to_string(j + 1));
    for (int bi = 0; bi < n; ++bi) {
      int v = cs.a0[static_cast<size_t>(j)].val[static_cast<size_t>(bi)];
      if (v >= 0)
        out.c0.c_t[static_cast<size_t>(j)][static_cast<size_t>(bi)] = g.inv(v);
    }
  }
  out.c0.validate();

  out.c_ev.group = g;
  out.c_ev.b_names = ev.b_ev_names;
  out.c_ev.c_t.assign(static_cast<size_t>((n + 1) * m),
                      std::vector<int>(static_cast<size_t>(ev.ev_base), -1));
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j < m; ++j) {
      out.c_ev.a_names.push_back("A" + std::to_string(j + 1) + "." +
                                 std::to_string(k));
      auto& row = out.c_ev.c_t[static_cast<size_t>(k * m + j)];
      for (int bi = 0; bi < n; ++bi) {
        int v = cs.a0[static_cast<size_t>(j)].val[static_cast<size_t>(bi)];
        if (v >= 0) row[static_cast<size_t>(k * n + bi)] = g.inv(v);
      }
    }
  out.c_ev.validate();

  // Every entry against an actual product, decoded through the base
  // subgroup: the product's labels must be uniform over the distinguished
  // domain and its edges must all hit the anchor point.
  std::vector<char> dom0(static_cast<size_t>(n), 0);
  for (int bi = 0; bi < n; ++bi)
    dom0[static_cast<size_t>(bi)] = rs.c(bi, a0) >= 0;
  const int zero = sev.zero_index();
  for (int row = 0; row < ev.ev_base; ++row)
    for (int col = 0; col < (n + 1) * m; ++col) {
      int p = sev.mul(out.l_rep[static_cast<size_t>(row)],
                      out.r_rep[static_cast<size_t>(col)]);
      int predicted = out.c_ev.c_t[static_cast<size_t>(col)][static_cast<size_t>(row)];
      if (p == zero) {
        if (predicted != -1)
          throw ConsistencyError("zero product against nonzero entry at (" +
                                 ev.b_ev_names[static_cast<size_t>(row)] + ", " +
                                 out.c_ev.a_names[static_cast<size_t>(col)] +
                                 ")");
        continue;
      }
      if (predicted == -1)
        throw ConsistencyError("nonzero product against zero entry at (" +
                               ev.b_ev_names[static_cast<size_t>(row)] + ", " +
                               out.c_ev.a_names[static_cast<size_t>(col)] + ")");
      const RowMonomialElement& e = sev.elem(p);
      int got = -1;
      for (int idx = 0; idx < ev.ev_base; ++idx) {
        bool expect = idx < n && dom0[static_cast<size_t>(idx)];
        if (e.defined_at(idx) != expect)
          throw ConsistencyError("product leaves the base class of the ideal");
        if (!expect) continue;
        if (e.dest[static_cast<size_t>(idx)] != anchor)
          throw ConsistencyError("product misses the anchor point");
        if (got < 0)
          got = e.label[static_cast<size_t>(idx)];
        else if (got != e.label[static_cast<size_t>(idx)])
          throw ConsistencyError("product labels are not uniform");
      }
      if (got != predicted)
        throw ConsistencyError(
            "structure matrix entry disagrees with the product at (" +
            ev.b_ev_names[static_cast<size_t>(row)] + ", " +
            out.c_ev.a_names[static_cast<size_t>(col)] + "): " +
            g.name(got) + " vs " + g.name(predicted));
    }

  // The nonzero pattern must be the idempotent pattern of the ideal.
  std::map<std::pair<int, int>, char> group_h;
  for (int x : zmi.nonzero)
    group_h[{gd.r_of[static_cast<size_t>(x)], gd.l_of[static_cast<size_t>(x)]}] =
        gd.h_is_group[static_cast<size_t>(gd.h_of[static_cast<size_t>(x)])];
  for (int row = 0; row < ev.ev_base; ++row)
    for (int col = 0; col < (n + 1) * m; ++col) {
      auto it = group_h.find(
          {gd.r_of[static_cast<size_t>(out.r_rep[static_cast<size_t>(col)])],
           gd.l_of[static_cast<size_t>(out.l_rep[static_cast<size_t>(row)])]});
      bool is_group = it != group_h.end() && it->second;
      bool nonzero =
          out.c_ev.c_t[static_cast<size_t>(col)][static_cast<size_t>(row)] != -1;
      if (is_group != nonzero)
        throw ConsistencyError("idempotent pattern disagrees with the matrix");
    }

  // Place each source column inside the family and record the scaling.
  out.col_class.assign(static_cast<size_t>(rs.num_a()), -1);
  out.col_scale.assign(static_cast<size_t>(rs.num_a()), 0);
  for (int a = 0; a < rs.num_a(); ++a) {
    int bi0 = -1;
    std::vector<int> val(static_cast<size_t>(n), -1);
    for (int bi = 0; bi < n; ++bi) {
      if (rs.c(bi, a) < 0) continue;
      if (bi0 < 0) bi0 = bi;
      val[static_cast<size_t>(bi)] =
          g.mul(rs.c(bi0, a), g.inv(rs.c(bi, a)));
    }
    if (bi0 < 0)
      throw ValidationError("structure matrix column " +
                            rs.a_names[static_cast<size_t>(a)] + " is zero");
    for (int j = 0; j < m; ++j)
      if (cs.a0[static_cast<size_t>(j)].val == val) {
        out.col_class[static_cast<size_t>(a)] = j;
        break;
      }
    if (out.col_class[static_cast<size_t>(a)] < 0)
      throw ConsistencyError("column " + rs.a_names[static_cast<size_t>(a)] +
                             " is missing from the class family");
    out.col_scale[static_cast<size_t>(a)] = rs.c(bi0, a);
    for (int bi = 0; bi < n; ++bi) {
      int lhs = rs.c(bi, a);
      int c0 = out.c0.c_t[static_cast<size_t>(
          out.col_class[static_cast<size_t>(a)])][static_cast<size_t>(bi)];
      int expect =
          c0 < 0 ? -1 : g.mul(c0, out.col_scale[static_cast<size_t>(a)]);
      if (lhs != expect)
        throw ConsistencyError("column " + rs.a_names[static_cast<size_t>(a)] +
                               " does not factor through its class");
    }
  }

  return out;
}

}  // namespace smgkit
