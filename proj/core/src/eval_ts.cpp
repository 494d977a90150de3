#include "smgkit/eval_ts.hpp"

#include <algorithm>
#include <map>

#include "smgkit/errors.hpp"
#include "smgkit/ev_construction.hpp"

namespace smgkit {

EvalReport build_eval_ts(const LatticeHandle& lat,
                         const std::vector<RowMonomialElement>& letters,
                         const M0Caps& caps) {
  EvalReport rep;
  rep.lattice_size = lat.size();
  M0Result m0 = enumerate_m0(lat, letters, caps);
  rep.m0_size = static_cast<int>(m0.elems.size());
  const BoolRelation& v = m0.elems[static_cast<size_t>(m0.vacuum)];
  const auto vdom = v.domain();
  rep.vacuum_domain_size =
      static_cast<int>(std::count(vdom.begin(), vdom.end(), 1));

  // forward tables of the sandwiched members
  std::vector<std::vector<int>> fwd;
  fwd.reserve(m0.elems.size());
  for (const auto& f : m0.elems)
    fwd.push_back(forward_table(lat, v.product(f).product(v)));

  // states: points, closed under every table
  std::vector<int> ordinal(static_cast<size_t>(lat.size()), -1);
  for (int pt = 0; pt < lat.n_points; ++pt) {
    const int li = lat.point(pt);
    if (!vdom[static_cast<size_t>(li)]) rep.points_in_vacuum = false;
    if (ordinal[static_cast<size_t>(li)] < 0) {
      ordinal[static_cast<size_t>(li)] = static_cast<int>(rep.state_elems.size());
      rep.state_elems.push_back(li);
    }
  }
  for (size_t head = 0; head < rep.state_elems.size(); ++head) {
    const int li = rep.state_elems[head];
    for (const auto& t : fwd) {
      const int img = t[static_cast<size_t>(li)];
      if (img < 0 || ordinal[static_cast<size_t>(img)] >= 0) continue;
      ordinal[static_cast<size_t>(img)] = static_cast<int>(rep.state_elems.size());
      rep.state_elems.push_back(img);
    }
  }
  rep.states = static_cast<int>(rep.state_elems.size());

  // contradiction: a reached state with a block that puts two labels over
  // one base point (the collapse element of the Rhodes lattice)
  std::vector<std::string> generic_names;
  for (int b = 0; b < lat.base; ++b)
    generic_names.push_back("b" + std::to_string(b + 1));
  for (int li : rep.state_elems) {
    if (!sp_blocks_consistent(lat.elems[static_cast<size_t>(li)], lat.base)) {
      rep.contradiction = true;
      rep.contradiction_witness =
          "state " +
          sp_format(lat.elems[static_cast<size_t>(li)], lat.group, lat.base,
                    generic_names) +
          " carries two labels over one base point inside a block";
      break;
    }
  }

  // distinct induced maps
  std::map<std::vector<int>, int> map_ids;
  for (size_t fi = 0; fi < fwd.size(); ++fi) {
    std::vector<int> m(rep.state_elems.size(), -1);
    for (size_t si = 0; si < rep.state_elems.size(); ++si) {
      const int img = fwd[fi][static_cast<size_t>(rep.state_elems[si])];
      m[si] = img < 0 ? -1 : ordinal[static_cast<size_t>(img)];
    }
    auto [it, fresh] = map_ids.emplace(m, static_cast<int>(rep.eval_maps.size()));
    if (fresh) rep.eval_maps.push_back(std::move(m));
    rep.map_of_m0.push_back(it->second);
  }
  rep.eval_size = static_cast<int>(rep.eval_maps.size());
  return rep;
}

namespace {

// the source action, point by point: (g, b) x = (g label, b dest)
std::vector<std::vector<int>> source_action(const EnumeratedSemigroup& s) {
  const Group& g = s.group();
  const int base = s.base_size();
  std::vector<std::vector<int>> act(static_cast<size_t>(s.size()));
  for (int x = 0; x < s.size(); ++x) {
    auto& ax = act[static_cast<size_t>(x)];
    ax.assign(static_cast<size_t>(g.order() * base), -1);
    for (int pt = 0; pt < g.order() * base; ++pt) {
      auto r = rm_act(g, sp_point_group(pt, base), sp_point_base(pt, base), s.elem(x));
      if (r) ax[static_cast<size_t>(pt)] = sp_point(r->first, r->second, base);
    }
  }
  return act;
}

}  // namespace

EmbedReport embed_check_formula(const EnumeratedSemigroup& s,
                                const ReesStructure& rs, int a0) {
  EmbedReport rep;
  rep.mode = "formula";
  rep.elements = s.size();
  const Group& g = s.group();
  const int base = s.base_size();
  rep.points = g.order() * base;
  EvGenerators ev = build_ev_generators(s, rs, a0);

  // clock loop: the pointwise least stable element over each start point
  // must be the whole clock orbit with singleton blocks
  for (int gi = 0; gi < g.order() && rep.failure.empty(); ++gi)
    for (int bi = 0; bi < base && rep.failure.empty(); ++bi) {
      const int start = sp_point(gi, ev.ev_index(bi, 0), ev.ev_base);
      SPElement orbit = least_letter_stable(
          g, ev.t, sp_singleton(g.order() * ev.ev_base, start));
      if (orbit.block_count() != ev.n + 1 ||
          orbit.support_size() != ev.n + 1) {
        rep.failure = "clock loop at (" + g.name(gi) + ", (" +
                      std::to_string(bi + 1) + ",0)) is not the free orbit";
        break;
      }
      for (int j = 0; j <= ev.n; ++j)
        if (!orbit.contains(sp_point(gi, ev.ev_index(bi, j), ev.ev_base))) {
          rep.failure = "clock loop misses clock value " + std::to_string(j);
          break;
        }
    }

  // each one-shot generator replays its source element on the orbit
  const auto act = source_action(s);
  for (int x = 0; x < s.size() && rep.failure.empty(); ++x) {
    const auto& hx = ev.h[static_cast<size_t>(x)];
    const auto& sx = s.elem(x);
    for (int idx = 0; idx < ev.ev_base; ++idx) {
      const bool diag = idx < ev.n;  // the block holding (i, i+1)
      if (!diag) {
        if (hx.dest[static_cast<size_t>(idx)] >= 0) {
          rep.failure = "one-shot generator " + std::to_string(x) +
                        " defined off the diagonal block";
          break;
        }
        continue;
      }
      const int bi = idx;
      const int want = sx.dest[static_cast<size_t>(bi)] < 0
                           ? -1
                           : ev.ev_index(sx.dest[static_cast<size_t>(bi)], 0);
      if (hx.dest[static_cast<size_t>(idx)] != want ||
          (want >= 0 && hx.label[static_cast<size_t>(idx)] !=
                            sx.label[static_cast<size_t>(bi)])) {
        rep.failure = "one-shot generator " + std::to_string(x) +
                      " disagrees with its source element at base point " +
                      std::to_string(bi);
        break;
      }
    }
  }

  // orbit . h_x: the pointwise forward image of the orbit must be the
  // single relabeled clock-0 point, i.e. the source action transported
  for (int x = 0; x < s.size() && rep.failure.empty(); ++x) {
    auto& col = rep.action.emplace_back();
    col.assign(static_cast<size_t>(rep.points), -1);
    for (int gi = 0; gi < g.order(); ++gi)
      for (int bi = 0; bi < base; ++bi) {
        const int start = sp_point(gi, ev.ev_index(bi, 0), ev.ev_base);
        SPElement orbit = least_letter_stable(
            g, ev.t, sp_singleton(g.order() * ev.ev_base, start));
        SPElement img = free_flow_forward(g, ev.h[static_cast<size_t>(x)], orbit);
        const int src = sp_point(gi, bi, base);
        const int want = act[static_cast<size_t>(x)][static_cast<size_t>(src)];
        if (want < 0) {
          if (!img.empty()) {
            rep.failure = "element " + std::to_string(x) +
                          " undefined on the source but not on the orbit";
            break;
          }
          continue;
        }
        const int wg = sp_point_group(want, base);
        const int wb = sp_point_base(want, base);
        const int wpt = sp_point(wg, ev.ev_index(wb, 0), ev.ev_base);
        if (img.support_size() != 1 || !img.contains(wpt)) {
          rep.failure = "element " + std::to_string(x) +
                        " lands off its source image at point " +
                        std::to_string(src);
          break;
        }
        col[static_cast<size_t>(src)] = want;
      }
    if (!rep.failure.empty()) break;
  }

  // the looped maps multiply like their sources: loop-then-shoot for x,
  // then loop-then-shoot for y, equals loop-then-shoot for xy. The h's
  // themselves compose to the empty function by construction; the loop
  // between them re-arms the clock.
  for (int x = 0; x < s.size() && rep.failure.empty(); ++x)
    for (int y = 0; y < s.size(); ++y) {
      const auto& ax = rep.action[static_cast<size_t>(x)];
      const auto& ay = rep.action[static_cast<size_t>(y)];
      const auto& axy = rep.action[static_cast<size_t>(s.mul(x, y))];
      for (int pt = 0; pt < rep.points; ++pt) {
        const int mid = ax[static_cast<size_t>(pt)];
        const int two = mid < 0 ? -1 : ay[static_cast<size_t>(mid)];
        if (two != axy[static_cast<size_t>(pt)]) {
          rep.failure = "elements " + std::to_string(x) + ", " +
                        std::to_string(y) +
                        " do not multiply like their product at point " +
                        std::to_string(pt);
          break;
        }
      }
      if (!rep.failure.empty()) break;
    }

  // distinct elements act distinctly (the embedded copy is faithful)
  if (rep.failure.empty()) {
    std::map<std::vector<int>, int> seen;
    for (int x = 0; x < s.size(); ++x) {
      auto [it, fresh] = seen.emplace(rep.action[static_cast<size_t>(x)], x);
      if (!fresh) {
        rep.failure = "elements " + std::to_string(it->second) + " and " +
                      std::to_string(x) + " act identically";
        break;
      }
    }
  }
  rep.ok = rep.failure.empty();
  return rep;
}

EmbedReport embed_check_full(const EnumeratedSemigroup& s,
                             const ReesStructure& rs, int a0,
                             std::size_t lattice_cap, const M0Caps& caps) {
  EmbedReport rep;
  rep.mode = "full";
  rep.elements = s.size();
  const Group& g = s.group();
  const int base = s.base_size();
  rep.points = g.order() * base;
  EvGenerators ev = build_ev_generators(s, rs, a0);

  LatticeHandle lat = LatticeHandle::build(g, ev.ev_base, lattice_cap);
  std::vector<RowMonomialElement> letters;
  letters.push_back(ev.t);
  for (const auto& h : ev.h) letters.push_back(h);
  rep.eval = build_eval_ts(lat, letters, caps);

  const M0Result m0 = enumerate_m0(lat, letters, caps);
  const BoolRelation& v = m0.elems[static_cast<size_t>(m0.vacuum)];
  const BoolRelation loop_t =
      loop_power(m0.elems[static_cast<size_t>(m0.letter_flow[0])]);

  std::vector<int> state_ord(static_cast<size_t>(lat.size()), -1);
  for (size_t i = 0; i < rep.eval.state_elems.size(); ++i)
    state_ord[static_cast<size_t>(rep.eval.state_elems[i])] = static_cast<int>(i);

  const auto act = source_action(s);
  for (int x = 0; x < s.size(); ++x) {
    // sandwiched loop-then-shoot relation for this element
    const BoolRelation& fh =
        m0.elems[static_cast<size_t>(m0.letter_flow[static_cast<size_t>(x) + 1])];
    const auto tx = forward_table(lat, v.product(loop_t).product(fh).product(v));
    auto& col = rep.action.emplace_back();
    col.assign(static_cast<size_t>(rep.points), -1);
    for (int pt = 0; pt < rep.points && rep.failure.empty(); ++pt) {
      const int gi = sp_point_group(pt, base);
      const int bi = sp_point_base(pt, base);
      const int phi = lat.point(sp_point(gi, ev.ev_index(bi, 0), ev.ev_base));
      if (state_ord[static_cast<size_t>(phi)] < 0) {
        rep.failure = "embedded point " + std::to_string(pt) +
                      " is not an evaluation state";
        break;
      }
      const int img = tx[static_cast<size_t>(phi)];
      const int want = act[static_cast<size_t>(x)][static_cast<size_t>(pt)];
      if (want < 0) {
        // undefined at the source: the evaluation sends the state to the
        // empty value, not to any embedded point
        if (img != lat.bottom()) {
          rep.failure = "element " + std::to_string(x) +
                        " does not vanish where its source is undefined";
          break;
        }
        continue;
      }
      const int wg = sp_point_group(want, base);
      const int wb = sp_point_base(want, base);
      const int wphi = lat.point(sp_point(wg, ev.ev_index(wb, 0), ev.ev_base));
      if (img != wphi) {
        rep.failure = "element " + std::to_string(x) +
                      " lands off its source image at point " + std::to_string(pt);
        break;
      }
      col[static_cast<size_t>(pt)] = want;
    }
    if (!rep.failure.empty()) break;
  }

  if (rep.failure.empty()) {
    std::map<std::vector<int>, int> seen;
    for (int x = 0; x < static_cast<int>(rep.action.size()); ++x) {
      auto [it, fresh] = seen.emplace(rep.action[static_cast<size_t>(x)], x);
      if (!fresh) {
        rep.failure = "elements " + std::to_string(it->second) + " and " +
                      std::to_string(x) + " act identically";
        break;
      }
    }
  }
  rep.ok = rep.failure.empty();
  return rep;
}

bool embed_reports_agree(const EmbedReport& a, const EmbedReport& b,
                         std::string* witness) {
  if (a.ok != b.ok) {
    if (witness) *witness = "verdicts differ (" + a.mode + " vs " + b.mode + ")";
    return false;
  }
  if (a.elements != b.elements || a.points != b.points) {
    if (witness) *witness = "shapes differ";
    return false;
  }
  if (a.action != b.action) {
    if (witness) *witness = "embedded actions differ";
    return false;
  }
  return true;
}

}  // namespace smgkit
