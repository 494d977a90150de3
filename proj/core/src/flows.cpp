#include "smgkit/flows.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "nlohmann/json.hpp"
#include "smgkit/errors.hpp"

namespace smgkit {

namespace {

using ojson = nlohmann::ordered_json;

std::string fail_text(const FlowAutomaton& aut, int q, int x) {
  std::string s;
  if (q >= 0)
    s += "state " + (q < static_cast<int>(aut.states.size())
                         ? aut.states[static_cast<size_t>(q)]
                         : std::string("<sink>"));
  if (x >= 0) s += " letter " + aut.alphabet[static_cast<size_t>(x)];
  return s;
}

// Completed destination: the sink (index |Q|) absorbs everything that is
// undefined, and all of its outgoing edges loop back to it.
int completed_dest(const FlowAutomaton& aut, int q, int x) {
  const int nq = static_cast<int>(aut.states.size());
  if (q == nq) return nq;
  const int d = aut.trans[static_cast<size_t>(q)][static_cast<size_t>(x)];
  return d < 0 ? nq : d;
}

// Aperiodicity of the transformation semigroup generated by the completed
// letter maps on Q u {sink}. Total maps, plain breadth-first closure.
void automaton_ts(const FlowAutomaton& aut, std::size_t* size,
                  bool* aperiodic) {
  const int nq = static_cast<int>(aut.states.size()) + 1;
  std::vector<std::vector<int>> gens;
  for (size_t x = 0; x < aut.alphabet.size(); ++x) {
    std::vector<int> m(static_cast<size_t>(nq));
    for (int q = 0; q < nq; ++q)
      m[static_cast<size_t>(q)] = completed_dest(aut, q, static_cast<int>(x));
    gens.push_back(std::move(m));
  }
  auto compose = [nq](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(static_cast<size_t>(nq));
    for (int q = 0; q < nq; ++q)
      c[static_cast<size_t>(q)] = b[static_cast<size_t>(a[static_cast<size_t>(q)])];
    return c;
  };
  std::set<std::vector<int>> seen(gens.begin(), gens.end());
  std::vector<std::vector<int>> frontier(seen.begin(), seen.end());
  const std::size_t cap = 1000000;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& f : frontier)
      for (const auto& gmap : gens) {
        auto fg = compose(f, gmap);
        if (seen.insert(fg).second) next.push_back(std::move(fg));
      }
    if (seen.size() > cap)
      throw CapExceededError("automaton transformation semigroup", cap);
    frontier = std::move(next);
  }
  *size = seen.size();
  *aperiodic = true;
  for (const auto& m : seen) {
    // x is aperiodic iff some power is idempotent-stable: x^k = x^{k+1}.
    std::set<std::vector<int>> powers;
    auto p = m;
    while (powers.insert(p).second) {
      auto pn = compose(p, m);
      if (pn == p) break;
      p = std::move(pn);
    }
    auto pn = compose(p, m);
    if (pn != p) {
      *aperiodic = false;
      return;
    }
  }
}

void check_shapes(const Group& g, const std::vector<RowMonomialElement>& letters,
                  const FlowAutomaton& aut, const FlowAssignment& fa) {
  if (letters.empty()) throw ValidationError("flow needs at least one letter");
  if (letters.size() != aut.alphabet.size())
    throw ValidationError("letter actions do not match the alphabet");
  const size_t base = letters[0].dest.size();
  for (const auto& l : letters)
    if (l.dest.size() != base)
      throw ValidationError("letters act on different base sets");
  if (aut.trans.size() != aut.states.size())
    throw ValidationError("transition table does not match the state list");
  for (const auto& row : aut.trans) {
    if (row.size() != aut.alphabet.size())
      throw ValidationError("transition row does not match the alphabet");
    for (int d : row)
      if (d < -1 || d >= static_cast<int>(aut.states.size()))
        throw ValidationError("transition out of range");
  }
  if (fa.target == FlowAssignment::Target::kSP) {
    if (fa.sp.size() != aut.states.size())
      throw ValidationError("one subset value per state required");
    for (const auto& v : fa.sp)
      if (v.n_points() != static_cast<int>(base) * g.order())
        throw ValidationError("subset value on the wrong point set");
  } else {
    if (fa.rh.size() != aut.states.size())
      throw ValidationError("one Rhodes value per state required");
    for (const auto& v : fa.rh)
      if (static_cast<int>(v.block_of.size()) != static_cast<int>(base))
        throw ValidationError("Rhodes value on the wrong base set");
  }
}

}  // namespace

int FlowAutomaton::state_index(const std::string& name) const {
  for (size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return static_cast<int>(i);
  return -1;
}

int FlowAutomaton::letter_index(const std::string& name) const {
  for (size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == name) return static_cast<int>(i);
  return -1;
}

FlowVerification verify_flow(const Group& g,
                             const std::vector<RowMonomialElement>& letters,
                             const FlowAutomaton& aut,
                             const FlowAssignment& fa) {
  check_shapes(g, letters, aut, fa);
  const int base = static_cast<int>(letters[0].dest.size());
  const int nq = static_cast<int>(aut.states.size());
  FlowVerification out;

  const bool sp_mode = fa.target == FlowAssignment::Target::kSP;

  // Coverage: every point of G x B (resp. every b in B classwise) must lie
  // in some state's value. The sink's bottom value contributes nothing.
  if (sp_mode) {
    for (int pt = 0; pt < base * g.order(); ++pt) {
      bool hit = false;
      for (int q = 0; q < nq && !hit; ++q) hit = fa.sp[static_cast<size_t>(q)].contains(pt);
      if (!hit)
        out.failures.push_back(
            {1, -1, -1,
             "point (" + g.name(sp_point_group(pt, base)) + ", b" +
                 std::to_string(sp_point_base(pt, base)) + ") uncovered"});
    }
  } else {
    for (int b = 0; b < base; ++b) {
      bool hit = false;
      for (int q = 0; q < nq && !hit; ++q)
        hit = fa.rh[static_cast<size_t>(q)].block_of[static_cast<size_t>(b)] >= 0;
      if (!hit)
        out.failures.push_back({1, -1, -1, "base point b" + std::to_string(b) + " uncovered"});
    }
  }

  // Cross sections (subset values only; Rhodes values carry one label per
  // point by construction).
  if (sp_mode)
    for (int q = 0; q < nq; ++q)
      if (!is_cross_section(fa.sp[static_cast<size_t>(q)], base))
        out.failures.push_back(
            {4, q, -1, fail_text(aut, q, -1) + ": two labels over one base point"});

  // Transition conditions on the completion. The sink has the bottom
  // value, so an undefined transition passes exactly when the source
  // value's support misses the letter's domain.
  for (int q = 0; q <= nq; ++q) {
    for (int x = 0; x < static_cast<int>(letters.size()); ++x) {
      ++out.checks;
      const int d = completed_dest(aut, q, x);
      const auto& act = letters[static_cast<size_t>(x)];
      if (sp_mode) {
        SPElement bottom = sp_bottom(base * g.order());
        const SPElement& Y = q == nq ? bottom : fa.sp[static_cast<size_t>(q)];
        const SPElement& Z = d == nq ? bottom : fa.sp[static_cast<size_t>(d)];
        // image points, remembering where each came from
        std::vector<std::pair<int, int>> moved;  // (source pt, image pt)
        for (int pt = 0; pt < Y.n_points(); ++pt) {
          if (!Y.contains(pt)) continue;
          auto r = rm_act(g, sp_point_group(pt, base), sp_point_base(pt, base), act);
          if (!r) continue;
          moved.emplace_back(pt, sp_point(r->first, r->second, base));
        }
        for (auto [src, img] : moved)
          if (!Z.contains(img)) {
            out.failures.push_back(
                {2, q, x,
                 fail_text(aut, q, x) + ": image point (" +
                     g.name(sp_point_group(img, base)) + ", b" +
                     std::to_string(sp_point_base(img, base)) + ") not in the target value"});
            break;
          }
        bool bad3 = false;
        for (size_t i = 0; i < moved.size() && !bad3; ++i)
          for (size_t j = i + 1; j < moved.size() && !bad3; ++j) {
            const bool before =
                Y.block_of[static_cast<size_t>(moved[i].first)] ==
                Y.block_of[static_cast<size_t>(moved[j].first)];
            const bool after =
                Z.contains(moved[i].second) && Z.contains(moved[j].second) &&
                Z.block_of[static_cast<size_t>(moved[i].second)] ==
                    Z.block_of[static_cast<size_t>(moved[j].second)];
            if (before != after) {
              bad3 = true;
              out.failures.push_back(
                  {3, q, x,
                   fail_text(aut, q, x) + ": pair of points " +
                       (before ? "merged before but not after"
                               : "separated before, merged after")});
            }
          }
      } else {
        const RhodesElement bottom = rh_bottom(base);
        const RhodesElement& r = q == nq ? bottom : fa.rh[static_cast<size_t>(q)];
        const RhodesElement& rp = d == nq ? bottom : fa.rh[static_cast<size_t>(d)];
        // D: support points where the letter is defined
        std::vector<int> dom;
        for (int b = 0; b < base; ++b)
          if (r.block_of[static_cast<size_t>(b)] >= 0 && act.dest[static_cast<size_t>(b)] >= 0)
            dom.push_back(b);
        bool bad2 = false;
        for (int b : dom)
          if (rp.block_of[static_cast<size_t>(act.dest[static_cast<size_t>(b)])] < 0) {
            bad2 = true;
            out.failures.push_back(
                {2, q, x,
                 fail_text(aut, q, x) + ": b" + std::to_string(b) + " lands on b" +
                     std::to_string(act.dest[static_cast<size_t>(b)]) +
                     " outside the target support"});
            break;
          }
        if (!bad2) {
          // classwise biconditional: the induced block map must be
          // well defined and injective, and within each source block the
          // twisted label f(b) lbl(b) f'(bx)^{-1} must be constant.
          for (size_t i = 0; i < dom.size(); ++i)
            for (size_t j = i + 1; j < dom.size(); ++j) {
              const int b = dom[i], c = dom[j];
              const bool before = r.block_of[static_cast<size_t>(b)] ==
                                  r.block_of[static_cast<size_t>(c)];
              const int bx = act.dest[static_cast<size_t>(b)];
              const int cx = act.dest[static_cast<size_t>(c)];
              const bool after = rp.block_of[static_cast<size_t>(bx)] ==
                                 rp.block_of[static_cast<size_t>(cx)];
              if (before != after) {
                out.failures.push_back(
                    {3, q, x,
                     fail_text(aut, q, x) + ": blocks of b" + std::to_string(b) +
                         ", b" + std::to_string(c) +
                         (before ? " split by the letter" : " merged by the letter")});
              } else if (before) {
                auto tw = [&](int bb) {
                  const int dd = act.dest[static_cast<size_t>(bb)];
                  return g.mul(
                      g.mul(r.value[static_cast<size_t>(bb)],
                            act.label[static_cast<size_t>(bb)]),
                      g.inv(rp.value[static_cast<size_t>(dd)]));
                };
                if (tw(b) != tw(c))
                  out.failures.push_back(
                      {3, q, x,
                       fail_text(aut, q, x) + ": labels over the block of b" +
                           std::to_string(b) + " disagree after the letter"});
              }
            }
        }
      }
    }
  }

  automaton_ts(aut, &out.automaton_ts_size, &out.automaton_aperiodic);
  out.passed = out.failures.empty();
  return out;
}

std::pair<FlowAutomaton, FlowAssignment> lift_flow_ev(
    const Group& g, const std::vector<RowMonomialElement>& letters,
    const FlowAutomaton& aut, const FlowAssignment& fa,
    const EvGenerators& ev, const std::vector<int>& letter_src) {
  if (fa.target != FlowAssignment::Target::kRh)
    throw ValidationError("only Rhodes-valued flows lift");
  if (letter_src.size() != aut.alphabet.size())
    throw ValidationError("letter_src does not match the alphabet");
  auto v = verify_flow(g, letters, aut, fa);
  if (!v.passed)
    throw ValidationError("flow does not verify, cannot lift: " +
                          v.failures.front().witness);
  const int base = static_cast<int>(letters[0].dest.size());
  if (ev.n != base)
    throw ValidationError("the one-shot expansion was built over a different base");

  auto find_h = [&](int src) {
    for (size_t i = 0; i < ev.h_of.size(); ++i)
      if (ev.h_of[i] == src) return static_cast<int>(i);
    throw ValidationError("no one-shot generator for source element " +
                          std::to_string(src));
  };

  FlowAutomaton up;
  up.states = aut.states;
  up.alphabet.push_back("t");
  std::vector<int> hidx;
  for (size_t x = 0; x < aut.alphabet.size(); ++x) {
    const int pos = find_h(letter_src[x]);
    hidx.push_back(pos);
    up.alphabet.push_back("h" + std::to_string(ev.h_of[static_cast<size_t>(pos)]));
  }
  for (size_t q = 0; q < aut.states.size(); ++q) {
    std::vector<int> row;
    row.push_back(static_cast<int>(q));  // t stabilises every flow state
    for (size_t x = 0; x < aut.alphabet.size(); ++x)
      row.push_back(aut.trans[q][x]);
    up.trans.push_back(std::move(row));
  }

  FlowAssignment ufa;
  ufa.target = FlowAssignment::Target::kRh;
  ufa.covering.emplace_back("t", "");
  for (size_t x = 0; x < aut.alphabet.size(); ++x)
    ufa.covering.emplace_back(up.alphabet[x + 1], aut.alphabet[x]);
  // Each base point inflates to its clock orbit {(bi, j)}; blocks are the
  // orbit unions of the old blocks and the label is constant on orbits.
  for (const auto& r : fa.rh) {
    RhodesElement e;
    e.block_of.assign(static_cast<size_t>(ev.ev_base), -1);
    e.value.assign(static_cast<size_t>(ev.ev_base), 0);
    for (int bi = 0; bi < base; ++bi) {
      if (r.block_of[static_cast<size_t>(bi)] < 0) continue;
      for (int k = 0; k <= ev.n; ++k) {
        const int idx = k * ev.n + bi;
        e.block_of[static_cast<size_t>(idx)] = r.block_of[static_cast<size_t>(bi)];
        e.value[static_cast<size_t>(idx)] = r.value[static_cast<size_t>(bi)];
      }
    }
    rh_normalize(g, e);
    ufa.rh.push_back(std::move(e));
  }
  return {std::move(up), std::move(ufa)};
}

FlowSearchResult find_small_flow(const Group& g,
                                 const std::vector<std::string>& letter_names,
                                 const std::vector<RowMonomialElement>& letters,
                                 int base_size, int max_states, bool enable,
                                 std::size_t node_cap) {
  if (!enable)
    throw ValidationError("find_small_flow is a testing aid; pass enable=true");
  if (letter_names.size() != letters.size())
    throw ValidationError("letter names do not match the actions");

  // All nonbottom Rhodes values over (G, base), canonical form.
  std::vector<RhodesElement> values;
  {
    const int full = (1 << base_size);
    for (int mask = 1; mask < full; ++mask) {
      std::vector<int> pts;
      for (int b = 0; b < base_size; ++b)
        if (mask & (1 << b)) pts.push_back(b);
      // partitions of pts by restricted growth strings
      std::vector<int> rgs(pts.size(), 0);
      while (true) {
        int nblk = 0;
        for (int v : rgs) nblk = std::max(nblk, v + 1);
        // value assignments: first point of each block pinned to identity
        std::vector<int> first(static_cast<size_t>(nblk), -1);
        for (size_t i = 0; i < pts.size(); ++i)
          if (first[static_cast<size_t>(rgs[i])] < 0)
            first[static_cast<size_t>(rgs[i])] = static_cast<int>(i);
        std::vector<size_t> freei;
        for (size_t i = 0; i < pts.size(); ++i)
          if (first[static_cast<size_t>(rgs[i])] != static_cast<int>(i))
            freei.push_back(i);
        std::vector<int> choice(freei.size(), 0);
        while (true) {
          RhodesElement e;
          e.block_of.assign(static_cast<size_t>(base_size), -1);
          e.value.assign(static_cast<size_t>(base_size), 0);
          for (size_t i = 0; i < pts.size(); ++i) {
            e.block_of[static_cast<size_t>(pts[i])] = rgs[i];
            e.value[static_cast<size_t>(pts[i])] = g.identity();
          }
          for (size_t k = 0; k < freei.size(); ++k)
            e.value[static_cast<size_t>(pts[freei[k]])] = choice[k];
          rh_normalize(g, e);
          values.push_back(std::move(e));
          // next value tuple
          size_t k = 0;
          for (; k < choice.size(); ++k) {
            if (++choice[k] < g.order()) break;
            choice[k] = 0;
          }
          if (k == choice.size()) break;
          if (choice.empty()) break;
        }
        // next restricted growth string
        int i = static_cast<int>(rgs.size()) - 1;
        for (; i > 0; --i) {
          int mx = 0;
          for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[static_cast<size_t>(j)]);
          if (rgs[static_cast<size_t>(i)] <= mx) break;
        }
        if (i <= 0) break;
        ++rgs[static_cast<size_t>(i)];
        for (size_t j = static_cast<size_t>(i) + 1; j < rgs.size(); ++j) rgs[j] = 0;
      }
    }
    std::sort(values.begin(), values.end(),
              [](const RhodesElement& a, const RhodesElement& b) {
                if (a.block_of != b.block_of) return a.block_of < b.block_of;
                return a.value < b.value;
              });
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }

  std::size_t nodes = 0;
  FlowSearchResult res;
  FlowAutomaton aut;
  FlowAssignment fa;
  fa.target = FlowAssignment::Target::kRh;

  // states take a nondecreasing tuple of value indices; transitions are
  // backtracked with per-cell pruning
  for (int ns = 1; ns <= max_states && !res.found; ++ns) {
    std::vector<int> idx(static_cast<size_t>(ns), 0);
    // combinations with repetition: nondecreasing index tuples
    while (true) {
      if (++nodes > node_cap) throw CapExceededError("flow search", node_cap);
      // coverage first
      std::vector<bool> cov(static_cast<size_t>(base_size), false);
      for (int i : idx)
        for (int b = 0; b < base_size; ++b)
          if (values[static_cast<size_t>(i)].block_of[static_cast<size_t>(b)] >= 0)
            cov[static_cast<size_t>(b)] = true;
      if (std::find(cov.begin(), cov.end(), false) == cov.end()) {
        aut.states.clear();
        aut.alphabet = letter_names;
        aut.trans.assign(static_cast<size_t>(ns),
                         std::vector<int>(letters.size(), -1));
        for (int i = 0; i < ns; ++i) aut.states.push_back("u" + std::to_string(i + 1));
        fa.rh.clear();
        for (int i : idx) fa.rh.push_back(values[static_cast<size_t>(i)]);

        // backtrack over destinations: -1 (sink) or any state
        std::function<bool(int)> go = [&](int cell) -> bool {
          if (++nodes > node_cap) throw CapExceededError("flow search", node_cap);
          if (cell == ns * static_cast<int>(letters.size())) {
            auto v = verify_flow(g, letters, aut, fa);
            if (v.passed && v.automaton_aperiodic) {
              res.found = true;
              res.aut = aut;
              res.assignment = fa;
              return true;
            }
            return false;
          }
          const int q = cell / static_cast<int>(letters.size());
          const int x = cell % static_cast<int>(letters.size());
          for (int d = -1; d < ns; ++d) {
            aut.trans[static_cast<size_t>(q)][static_cast<size_t>(x)] = d;
            // prune: conditions 2 and 3 for this cell alone
            bool ok = true;
            {
              const auto& act = letters[static_cast<size_t>(x)];
              const RhodesElement bottom = rh_bottom(base_size);
              const RhodesElement& r = fa.rh[static_cast<size_t>(q)];
              const RhodesElement& rp = d < 0 ? bottom : fa.rh[static_cast<size_t>(d)];
              std::vector<int> dom;
              for (int b = 0; b < base_size; ++b)
                if (r.block_of[static_cast<size_t>(b)] >= 0 &&
                    act.dest[static_cast<size_t>(b)] >= 0)
                  dom.push_back(b);
              for (int b : dom)
                if (ok && rp.block_of[static_cast<size_t>(act.dest[static_cast<size_t>(b)])] < 0)
                  ok = false;
              if (ok)
                for (size_t i = 0; i < dom.size() && ok; ++i)
                  for (size_t j = i + 1; j < dom.size() && ok; ++j) {
                    const int b = dom[i], c = dom[j];
                    const bool before = r.block_of[static_cast<size_t>(b)] ==
                                        r.block_of[static_cast<size_t>(c)];
                    const int bx = act.dest[static_cast<size_t>(b)];
                    const int cx = act.dest[static_cast<size_t>(c)];
                    const bool after = rp.block_of[static_cast<size_t>(bx)] ==
                                       rp.block_of[static_cast<size_t>(cx)];
                    if (before != after) ok = false;
                    if (ok && before) {
                      auto tw = [&](int bb) {
                        const int dd = act.dest[static_cast<size_t>(bb)];
                        return g.mul(g.mul(r.value[static_cast<size_t>(bb)],
                                           act.label[static_cast<size_t>(bb)]),
                                     g.inv(rp.value[static_cast<size_t>(dd)]));
                      };
                      if (tw(b) != tw(c)) ok = false;
                    }
                  }
            }
            if (ok && go(cell + 1)) return true;
          }
          aut.trans[static_cast<size_t>(q)][static_cast<size_t>(x)] = -1;
          return false;
        };
        if (go(0)) break;
      }
      // next nondecreasing tuple
      int i = ns - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] + 1 >= static_cast<int>(values.size()))
        --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (size_t j = static_cast<size_t>(i) + 1; j < idx.size(); ++j)
        idx[j] = idx[static_cast<size_t>(i)];
    }
  }
  return res;
}

std::string flow_to_json(const Group& g, const std::vector<std::string>& b_names,
                         const FlowAutomaton& aut, const FlowAssignment& fa) {
  ojson j;
  j["states"] = aut.states;
  j["alphabet"] = aut.alphabet;
  ojson tr = ojson::object();
  for (size_t q = 0; q < aut.states.size(); ++q) {
    ojson row = ojson::object();
    for (size_t x = 0; x < aut.alphabet.size(); ++x) {
      const int d = aut.trans[q][x];
      if (d < 0)
        row[aut.alphabet[x]] = nullptr;
      else
        row[aut.alphabet[x]] = aut.states[static_cast<size_t>(d)];
    }
    tr[aut.states[q]] = std::move(row);
  }
  j["transitions"] = std::move(tr);
  j["target"] = fa.target == FlowAssignment::Target::kRh ? "rhodes" : "subset";
  ojson vals = ojson::object();
  for (size_t q = 0; q < aut.states.size(); ++q) {
    ojson v = ojson::object();
    if (fa.target == FlowAssignment::Target::kRh) {
      const auto& r = fa.rh[q];
      ojson part = ojson::array();
      ojson labels = ojson::object();
      for (const auto& blk : [&] {
             std::map<int, std::vector<int>> m;
             for (size_t b = 0; b < r.block_of.size(); ++b)
               if (r.block_of[b] >= 0) m[r.block_of[b]].push_back(static_cast<int>(b));
             return m;
           }()) {
        ojson arr = ojson::array();
        for (int b : blk.second) arr.push_back(b_names[static_cast<size_t>(b)]);
        part.push_back(std::move(arr));
      }
      for (size_t b = 0; b < r.block_of.size(); ++b)
        if (r.block_of[b] >= 0) labels[b_names[b]] = g.name(r.value[b]);
      v["partition"] = std::move(part);
      v["labels"] = std::move(labels);
    } else {
      const auto& e = fa.sp[q];
      const int base = static_cast<int>(b_names.size());
      ojson part = ojson::array();
      for (const auto& blk : e.blocks()) {
        ojson arr = ojson::array();
        for (int pt : blk) {
          ojson pair = ojson::array();
          pair.push_back(g.name(sp_point_group(pt, base)));
          pair.push_back(b_names[static_cast<size_t>(sp_point_base(pt, base))]);
          arr.push_back(std::move(pair));
        }
        part.push_back(std::move(arr));
      }
      v["partition"] = std::move(part);
    }
    vals[aut.states[q]] = std::move(v);
  }
  j["values"] = std::move(vals);
  if (!fa.covering.empty()) {
    ojson cov = ojson::object();
    for (const auto& [letter, over] : fa.covering) cov[letter] = over;
    j["covering"] = std::move(cov);
  }
  return j.dump(2) + "\n";
}

std::pair<FlowAutomaton, FlowAssignment> flow_from_json(
    const Group& g, const std::vector<std::string>& b_names,
    const std::string& json_text) {
  ojson j;
  try {
    j = ojson::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("flow file: ") + e.what());
  }
  auto need = [&](const char* k) {
    if (!j.contains(k)) throw ParseError(std::string("flow file: missing \"") + k + "\"");
    return j.at(k);
  };
  FlowAutomaton aut;
  for (const auto& s : need("states")) aut.states.push_back(s.get<std::string>());
  for (const auto& s : need("alphabet")) aut.alphabet.push_back(s.get<std::string>());
  {
    std::unordered_set<std::string> seen(aut.states.begin(), aut.states.end());
    if (seen.size() != aut.states.size()) throw ParseError("flow file: duplicate state");
  }
  auto b_index = [&](const std::string& n) {
    for (size_t i = 0; i < b_names.size(); ++i)
      if (b_names[i] == n) return static_cast<int>(i);
    throw ParseError("flow file: unknown base point " + n);
  };
  const auto& tr = need("transitions");
  for (const auto& st : aut.states) {
    std::vector<int> row;
    if (!tr.contains(st)) throw ParseError("flow file: no transitions for " + st);
    for (const auto& x : aut.alphabet) {
      const auto& cell = tr.at(st);
      if (!cell.contains(x)) {
        row.push_back(-1);
        continue;
      }
      const auto& v = cell.at(x);
      if (v.is_null()) {
        row.push_back(-1);
        continue;
      }
      const int d = aut.state_index(v.get<std::string>());
      if (d < 0) throw ParseError("flow file: unknown destination " + v.get<std::string>());
      row.push_back(d);
    }
    aut.trans.push_back(std::move(row));
  }
  FlowAssignment fa;
  const std::string tgt = need("target").get<std::string>();
  if (tgt == "rhodes")
    fa.target = FlowAssignment::Target::kRh;
  else if (tgt == "subset")
    fa.target = FlowAssignment::Target::kSP;
  else
    throw ParseError("flow file: target must be \"rhodes\" or \"subset\"");
  const auto& vals = need("values");
  for (const auto& st : aut.states) {
    if (!vals.contains(st)) throw ParseError("flow file: no value for " + st);
    const auto& v = vals.at(st);
    if (fa.target == FlowAssignment::Target::kRh) {
      RhodesElement r;
      r.block_of.assign(b_names.size(), -1);
      r.value.assign(b_names.size(), 0);
      int blk = 0;
      for (const auto& part : v.at("partition")) {
        for (const auto& pn : part) {
          const int b = b_index(pn.get<std::string>());
          if (r.block_of[static_cast<size_t>(b)] >= 0)
            throw ParseError("flow file: base point " + pn.get<std::string>() +
                             " in two blocks of " + st);
          r.block_of[static_cast<size_t>(b)] = blk;
        }
        ++blk;
      }
      if (v.contains("labels"))
        for (auto it = v.at("labels").begin(); it != v.at("labels").end(); ++it) {
          const int b = b_index(it.key());
          if (r.block_of[static_cast<size_t>(b)] < 0)
            throw ParseError("flow file: label on uncovered point " + it.key());
          const int e = g.find_name(it.value().get<std::string>());
          if (e < 0) throw ParseError("flow file: unknown group element " +
                                      it.value().get<std::string>());
          r.value[static_cast<size_t>(b)] = e;
        }
      rh_normalize(g, r);
      fa.rh.push_back(std::move(r));
    } else {
      const int base = static_cast<int>(b_names.size());
      std::vector<std::vector<int>> blocks;
      for (const auto& part : v.at("partition")) {
        std::vector<int> blk;
        for (const auto& pr : part) {
          const int e = g.find_name(pr.at(0).get<std::string>());
          if (e < 0) throw ParseError("flow file: unknown group element " +
                                      pr.at(0).get<std::string>());
          blk.push_back(sp_point(e, b_index(pr.at(1).get<std::string>()), base));
        }
        blocks.push_back(std::move(blk));
      }
      fa.sp.push_back(sp_from_blocks(g.order() * base, blocks));
    }
  }
  if (j.contains("covering"))
    for (auto it = j.at("covering").begin(); it != j.at("covering").end(); ++it)
      fa.covering.emplace_back(it.key(), it.value().get<std::string>());
  return {std::move(aut), std::move(fa)};
}

}  // namespace smgkit
