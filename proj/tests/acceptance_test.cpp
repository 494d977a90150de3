// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Everything here reads the bundled corpus under data/ and re-derives the
// advertised structure from scratch; no tolerance anywhere.
#include <algorithm>
#include <cstdio>
#include <exception>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fixtures.hpp"
#include "smgkit/classify.hpp"
#include "smgkit/closure_relation.hpp"
#include "smgkit/complexity.hpp"
#include "smgkit/congruence.hpp"
#include "smgkit/description.hpp"
#include "smgkit/ev_construction.hpp"
#include "smgkit/eval_ts.hpp"
#include "smgkit/flow_monoid.hpp"
#include "smgkit/flows.hpp"
#include "smgkit/green.hpp"
#include "smgkit/tilson.hpp"
#include "smgkit/type_ii.hpp"

using namespace smgkit;
using testfix::Built;
using testfix::build;

namespace {

std::string data_path(const std::string& file) {
  return std::string(SMGKIT_DATA_DIR) + "/" + file;
}

std::string slurp(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open " + path);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
  std::fclose(f);
  return out;
}

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> evidence;
};

struct Check {
  bool ok = true;
  std::ostringstream bad;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (!ok) bad << "; ";
    ok = false;
    bad << what;
  }
};

Built load(const std::string& name) {
  return build(load_description(data_path(name + ".json")));
}

// ---- criterion 1: MTF reproduction ----------------------------------

Outcome criterion1() {
  Built m = load("mtf");
  GreenData gd = green_data(m.s);
  Check c;

  c.expect(m.s.size() == 97, "|MTF| != 97");
  c.expect(gd.num_j() == 4, "J-class count != 4");

  int zi = m.s.zero_index(), ui = m.s.identity_index();
  c.expect(zi >= 0 && ui >= 0, "zero or identity missing");
  int jz = gd.j_of[(size_t)zi], ju = gd.j_of[(size_t)ui];

  // locate sigma and r among the generators
  int sidx = -1, ridx = -1;
  for (size_t i = 0; i < m.names.size(); ++i) {
    if (m.names[i] == "sigma") sidx = m.s.generator((int)i);
    if (m.names[i] == "r") ridx = m.s.generator((int)i);
  }
  c.expect(sidx >= 0 && ridx >= 0, "sigma or r not among the generators");

  // units: cyclic of order four, generated by sigma
  MaximalSubgroup units = maximal_subgroup(m.s, gd, gd.h_of[(size_t)ui]);
  c.expect(units.group.order() == 4 &&
               groups_isomorphic(units.group, Group::cyclic(4)),
           "units are not Z4");
  c.expect((int)gd.j_members[(size_t)ju].size() == 4, "unit class size != 4");

  // middle class: the orbit {sigma^i r sigma^j}
  std::vector<int> spow{ui};
  for (int k = 0; k < 3; ++k) spow.push_back(m.s.mul(spow.back(), sidx));
  std::set<int> orbit;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      orbit.insert(m.s.mul(m.s.mul(spow[(size_t)i], ridx), spow[(size_t)j]));

  int jn = gd.j_of[(size_t)ridx];
  std::set<int> null_class(gd.j_members[(size_t)jn].begin(),
                           gd.j_members[(size_t)jn].end());
  c.expect(orbit == null_class, "middle class != {sigma^i r sigma^j}");
  c.expect(!gd.j_regular[(size_t)jn], "middle class is regular");
  c.expect(gd.schutzenberger_order(jn) == 1,
           "middle class Schutzenberger group nontrivial");

  // ideal: 84 nonzero elements, maximal subgroups Z2
  int ji = -1;
  for (int j = 0; j < gd.num_j(); ++j)
    if (j != jz && j != ju && j != jn) ji = j;
  c.expect(ji >= 0 && (int)gd.j_members[(size_t)ji].size() == 84,
           "ideal class size != 84");
  int hg = -1;
  for (int e : gd.idempotents)
    if (gd.j_of[(size_t)e] == ji) hg = gd.h_of[(size_t)e];
  c.expect(hg >= 0, "no idempotent in the ideal");
  if (hg >= 0) {
    MaximalSubgroup ig = maximal_subgroup(m.s, gd, hg);
    c.expect(groups_isomorphic(ig.group, Group::cyclic(2)),
             "ideal maximal subgroup is not Z2");
  }

  // chain order: zero < ideal < null < units, a total order
  auto lt = [&](int a, int b) {
    return gd.j_leq[(size_t)a][(size_t)b] && !gd.j_leq[(size_t)b][(size_t)a];
  };
  c.expect(lt(jz, ji) && lt(ji, jn) && lt(jn, ju), "J-order chain broken");

  Classification cls = classify_monoid(m.s, gd);
  c.expect(cls.is_smallish && !cls.is_small,
           "classification is not smallish-but-not-small");

  Outcome out;
  if (!c.ok) {
    out.pass = false;
    out.detail = "structural clause broken: " + c.bad.str();
    return out;
  }
  // Every verifiable clause holds, but the stated middle-class size is
  // not attainable: sigma^2 r = r collapses the orbit to 8 elements.
  bool s2r = m.s.mul(spow[2], ridx) == ridx;
  out.pass = false;
  std::ostringstream d;
  d << "middle class {sigma^i r sigma^j} has " << null_class.size()
    << " elements, not the stated 16 (sigma^2 r = r: "
    << (s2r ? "verified" : "NOT verified")
    << "); all other clauses hold: 4 J-classes in chain order, units Z4, "
       "non-regular middle class with trivial Schutzenberger group, ideal "
       "subgroup Z2, smallish not small";
  out.detail = d.str();
  return out;
}

// ---- criterion 2: tilson_2j on Sm(MTF) -------------------------------

Outcome criterion2() {
  Built m = load("mtf");
  GreenData gd = green_data(m.s);
  Classification cls = classify_monoid(m.s, gd);
  EnumeratedSemigroup sm =
      EnumeratedSemigroup::sub_semigroup(m.s, small_submonoid_members(cls));
  GreenData gsm = green_data(sm);
  Classification csm = classify_monoid(sm, gsm);

  Check c;
  c.expect(sm.size() == 89, "|Sm(MTF)| != 89");
  c.expect(csm.is_small, "Sm(MTF) is not small");

  Tilson2J t = tilson_2j(sm, csm);
  c.expect(t.complexity == 1, "tilson_2j != 1");
  c.expect(t.orbits.size() == 2, "orbit count != 2");

  Outcome out;
  for (size_t i = 0; i < t.orbits.size(); ++i) {
    const OrbitEvidence& ev = t.orbits[i];
    std::ostringstream line;
    line << "orbit " << i + 1 << ": size " << ev.orbit.size()
         << ", idempotent-generated part " << ev.eg_size << ", "
         << (ev.aperiodic ? "aperiodic" : "NOT aperiodic");
    out.evidence.push_back(line.str());
    c.expect(ev.aperiodic && ev.witness.empty(),
             "orbit " + std::to_string(i + 1) + " not aperiodic");
  }

  out.pass = c.ok;
  out.detail = c.ok ? "tilson_2j(Sm(MTF)) = 1, both orbit monoids aperiodic"
                    : c.bad.str();
  return out;
}

// ---- criterion 3: the clock extension pipeline -----------------------

Outcome criterion3() {
  Check c;
  std::ostringstream d;
  for (const char* name : {"toy_b2", "toy_b3"}) {
    Built src = load(name);
    const ReesStructure& rs = src.d.rees;
    EvGenerators ev = build_ev_generators(src.s, rs, 0);
    EnumeratedSemigroup sev = build_sev(ev);

    EvPropertyReport rep = verify_ev_properties(src.s, rs, 0, ev, sev);
    c.expect(rep.all(), std::string(name) + ": " + rep.failure);

    GreenData gd = green_data(sev);
    Classification cls = classify_monoid(sev, gd);
    c.expect(cls.is_smallish, std::string(name) + ": extension not smallish");

    EvCrossSections cs = ev_cross_sections(src.s, sev, ev);
    EvStructureMatrix smx = ev_structure_matrix(src.s, rs, 0, ev, sev, cs);
    const int n = ev.n, mcls = (int)cs.a0.size();
    bool diag = smx.c_ev.num_a() == mcls * (n + 1) &&
                smx.c_ev.num_b() == n * (n + 1);
    for (int a = 0; diag && a < smx.c_ev.num_a(); ++a)
      for (int bb = 0; diag && bb < smx.c_ev.num_b(); ++bb) {
        int want = a / mcls != bb / n ? -1 : smx.c0.c(bb % n, a % mcls);
        diag = smx.c_ev.c(bb, a) == want;
      }
    c.expect(diag, std::string(name) + ": structure matrix not the "
                                       "block-diagonal spread of c0");
    bool cols = true;
    for (int a = 0; cols && a < rs.num_a(); ++a) {
      int cl = smx.col_class[(size_t)a];
      cols = cl >= 0;
      for (int bi = 0; cols && bi < rs.num_b(); ++bi) {
        int c0e = smx.c0.c(bi, cl);
        int want = c0e < 0 ? -1 : ev.group.mul(c0e, smx.col_scale[(size_t)a]);
        cols = rs.c(bi, a) == want;
      }
    }
    c.expect(cols, std::string(name) +
                       ": source columns not scaled columns of c0");

    EnumeratedSemigroup smv =
        EnumeratedSemigroup::sub_semigroup(sev, small_submonoid_members(cls));
    Classification csm = classify_monoid(smv, green_data(smv));
    Tilson2J t = tilson_2j(smv, csm);
    c.expect(t.complexity == 1,
             std::string(name) + ": tilson_2j of the small part != 1");
    d << name << ": |S^Ev| = " << sev.size() << ", |Sm| = " << smv.size()
      << ", tilson_2j = " << t.complexity << "  ";
  }
  Outcome out;
  out.pass = c.ok;
  out.detail = c.ok ? d.str() : c.bad.str();
  return out;
}

// ---- criterion 4: congruence oracle equivalence ----------------------

Outcome criterion4() {
  Check c;
  int covered = 0;
  for (const char* name :
       {"toy_b1", "toy_b2", "toy_b3", "small_c2", "mtf"}) {
    Built bu = load(name);
    int base = bu.s.base_size();
    int m = bu.s.group().order() * base;
    if (m > 12) continue;
    ++covered;

    TypeIICertificate s2 = type_ii(bu.s);
    // the library route cross-checks the ideal-restricted variant inside
    std::vector<int> fast = tilson_congruence(bu.s, green_data(bu.s), s2);

    std::vector<std::vector<int>> maps;
    for (int x = 0; x < bu.s.size(); ++x) {
      std::vector<int> f((size_t)m, -1);
      for (int p = 0; p < m; ++p) {
        auto im = rm_act(bu.s.group(), p / base, p % base, bu.s.elem(x));
        if (im) f[(size_t)p] = im->first * base + im->second;
      }
      maps.push_back(std::move(f));
    }
    std::vector<int> brute = minimal_injective_congruence(m, maps);
    c.expect(fast == brute,
             std::string(name) + ": tilson != minimal injective congruence");
  }
  c.expect(covered == 5, "expected all five corpus instances at 12 points "
                         "or fewer");
  Outcome out;
  out.pass = c.ok;
  out.detail = c.ok ? "5 instances, unrestricted and ideal-restricted routes "
                      "agree with the union-find oracle"
                    : c.bad.str();
  return out;
}

// ---- criterion 5: flow lifting ---------------------------------------

Outcome criterion5() {
  Built src = load("toy_b2");
  auto [aut, fa] = flow_from_json(src.d.group, src.d.b_names,
                                  slurp(data_path("toy_b2_flow.json")));
  std::vector<RowMonomialElement> letters;
  std::vector<int> letter_src;
  for (const std::string& a : aut.alphabet) {
    int gi = -1;
    for (int k = 0; k < src.s.num_generators(); ++k)
      if (src.s.generator_name(k) == a) gi = k;
    if (gi < 0) throw std::runtime_error("letter " + a + " not a generator");
    letter_src.push_back(src.s.generator(gi));
    letters.push_back(src.s.elem(letter_src.back()));
  }

  Check c;
  FlowVerification v = verify_flow(src.d.group, letters, aut, fa);
  c.expect(v.aperiodic_flow(), "base flow does not verify aperiodically");

  EvGenerators ev = build_ev_generators(src.s, src.d.rees, 0);
  EnumeratedSemigroup sev = build_sev(ev);
  auto [laut, lfa] = lift_flow_ev(src.d.group, letters, aut, fa, ev,
                                  letter_src);
  std::vector<RowMonomialElement> lifted_letters;
  for (const std::string& a : laut.alphabet) {
    int gi = -1;
    for (int k = 0; k < sev.num_generators(); ++k)
      if (sev.generator_name(k) == a) gi = k;
    if (gi < 0) throw std::runtime_error("lifted letter " + a + " missing");
    lifted_letters.push_back(sev.elem(sev.generator(gi)));
  }
  FlowVerification lv = verify_flow(src.d.group, lifted_letters, laut, lfa);
  c.expect(lv.aperiodic_flow(), "lifted flow does not verify aperiodically");

  // mutation: drop one transition
  FlowAutomaton cut = aut;
  cut.trans[0][0] = -1;
  FlowVerification mv1 = verify_flow(src.d.group, letters, cut, fa);
  bool cond2 = false;
  for (const FlowFailure& f : mv1.failures) cond2 |= f.condition == 2;
  c.expect(!mv1.passed && cond2 && !mv1.failures.empty() &&
               !mv1.failures[0].witness.empty(),
           "deleted transition not flagged with a witness");

  // mutation: corrupt one cross-section value
  FlowAssignment dup = fa;
  dup.rh[1] = dup.rh[0];
  FlowVerification mv2 = verify_flow(src.d.group, letters, aut, dup);
  bool cond1 = false;
  for (const FlowFailure& f : mv2.failures) cond1 |= f.condition == 1;
  c.expect(!mv2.passed && cond1 && !mv2.failures.empty() &&
               !mv2.failures[0].witness.empty(),
           "corrupted value not flagged with a witness");

  Outcome out;
  out.pass = c.ok;
  if (c.ok) {
    std::ostringstream d;
    d << "base flow TS " << v.automaton_ts_size << " aperiodic, lifted TS "
      << lv.automaton_ts_size << " aperiodic, both mutations produce "
      << "condition witnesses";
    out.detail = d.str();
  } else {
    out.detail = c.bad.str();
  }
  return out;
}

// ---- criterion 6: eval engine at four points -------------------------

Outcome criterion6() {
  Built src = load("toy_b2");
  LatticeHandle lat = LatticeHandle::build(src.d.group, src.s.base_size());
  Check c;
  c.expect(lat.size() == 52, "|L| != 52");

  M0Result m0 = enumerate_m0(lat, src.letters, {});
  c.expect(m0.elems.size() == 324, "|M0| != 324");

  bool closed = true;
  for (const BoolRelation& f : m0.elems) closed &= closure_check(lat, f).ok;
  c.expect(closed, "a member fails the closure check");

  const BoolRelation& v = m0.elems[(size_t)m0.vacuum];
  c.expect(v.product(v) == v && v.is_diagonal(), "V not an idempotent "
                                                 "diagonal");

  // forward flow is a monoid action, checked on every pair
  std::unordered_map<BoolRelation, int, BoolRelationHash> index;
  for (size_t i = 0; i < m0.elems.size(); ++i)
    index.emplace(m0.elems[i], (int)i);
  std::vector<std::vector<int>> fwd;
  for (const BoolRelation& f : m0.elems)
    fwd.push_back(forward_table(lat, f));
  bool action = true;
  for (size_t i = 0; action && i < m0.elems.size(); ++i)
    for (size_t j = 0; action && j < m0.elems.size(); ++j) {
      auto it = index.find(m0.elems[i].product(m0.elems[j]));
      if (it == index.end()) {
        action = false;
        break;
      }
      const std::vector<int>& fp = fwd[(size_t)it->second];
      for (int l = 0; l < lat.size(); ++l) {
        int mid = fwd[i][(size_t)l];
        int got = mid < 0 ? -1 : fwd[j][(size_t)mid];
        if (got != fp[(size_t)l]) {
          action = false;
          break;
        }
      }
    }
  c.expect(action, "forward tables do not compose multiplicatively");

  EvalReport rep = build_eval_ts(lat, src.letters, {});
  c.expect(!rep.contradiction && rep.points_in_vacuum,
           "eval run reports a contradiction");

  // full and formula embeddings agree where the full engine is feasible
  Built b1 = load("toy_b1");
  EmbedReport formula = embed_check_formula(b1.s, b1.d.rees, 0);
  EmbedReport full = embed_check_full(b1.s, b1.d.rees, 0);
  std::string w;
  c.expect(formula.ok && full.ok && embed_reports_agree(formula, full, &w),
           "embed modes disagree: " + w);

  Outcome out;
  out.pass = c.ok;
  if (c.ok) {
    std::ostringstream d;
    d << "|L| = 52, |M0| = " << m0.elems.size() << " in " << m0.rounds
      << " rounds, all closure checks pass, action multiplicative, "
      << rep.states << " states / " << rep.eval_size
      << " maps without contradiction, embed modes agree";
    out.detail = d.str();
  } else {
    out.detail = c.bad.str();
  }
  return out;
}

// ---- criterion 7: embedding by formula on every instance -------------

Outcome criterion7() {
  Check c;
  std::ostringstream d;
  for (const char* name :
       {"toy_b1", "toy_b2", "toy_b3", "small_c2", "mtf"}) {
    Built bu = load(name);
    EmbedReport rep = embed_check_formula(bu.s, bu.d.rees, 0);
    c.expect(rep.ok, std::string(name) + ": " + rep.failure);
    c.expect(rep.elements == bu.s.size(),
             std::string(name) + ": embedded element count off");
    d << name << " " << rep.elements << "/" << rep.points << "  ";
  }
  Outcome out;
  out.pass = c.ok;
  out.detail = c.ok ? "all five instances re-embed (elements/points): " +
                          d.str()
                    : c.bad.str();
  return out;
}

// ---- criterion 8: property suites ------------------------------------

Outcome criterion8() {
  Check c;

  // associativity of composition, exhaustive on three corpus semigroups
  for (const char* name : {"toy_b2", "small_c2", "toy_b3"}) {
    Built bu = load(name);
    const Group& g = bu.s.group();
    bool assoc = true;
    for (int x = 0; assoc && x < bu.s.size(); ++x)
      for (int y = 0; assoc && y < bu.s.size(); ++y)
        for (int z = 0; z < bu.s.size(); ++z) {
          const RowMonomialElement &ex = bu.s.elem(x), &ey = bu.s.elem(y),
                                   &ez = bu.s.elem(z);
          if (rm_compose(g, rm_compose(g, ex, ey), ez) !=
              rm_compose(g, ex, rm_compose(g, ey, ez))) {
            assoc = false;
            break;
          }
        }
    c.expect(assoc, std::string(name) + ": associativity broken");
  }

  // lattice laws over four points, exhaustive
  std::vector<SPElement> sp = enumerate_sp(4, 1000);
  c.expect(sp.size() == 52, "SP over 4 points != 52 elements");
  bool laws = true;
  for (const SPElement& p : sp)
    for (const SPElement& q : sp) {
      SPElement m = sp_meet(p, q), j = sp_join(p, q);
      laws &= m == sp_meet(q, p) && j == sp_join(q, p);
      laws &= sp_meet(p, p) == p && sp_join(p, p) == p;
      laws &= sp_join(p, m) == p && sp_meet(p, j) == p;
      laws &= sp_leq(p, q) == (m == p) && sp_leq(p, q) == (j == q);
      if (!laws) break;
    }
  for (const SPElement& p : sp) {
    if (!laws) break;
    for (const SPElement& q : sp) {
      SPElement m = sp_meet(p, q), j = sp_join(p, q);
      for (const SPElement& r : sp) {
        laws &= !(sp_leq(r, p) && sp_leq(r, q)) || sp_leq(r, m);
        laws &= !(sp_leq(p, r) && sp_leq(q, r)) || sp_leq(j, r);
      }
      if (!laws) break;
    }
  }
  c.expect(laws, "an SP lattice law fails over 4 points");

  // both smallish characterizations on every corpus monoid with zero;
  // classify_monoid runs them side by side and throws on disagreement
  int monoids = 0;
  for (const char* name :
       {"toy_b1", "toy_b2", "toy_b3", "small_c2", "mtf"}) {
    Built bu = load(name);
    if (bu.s.identity_index() < 0 || bu.s.zero_index() < 0 ||
        bu.s.size() > 200)
      continue;
    classify_monoid(bu.s, green_data(bu.s));
    ++monoids;
  }
  c.expect(monoids == 4, "expected four corpus monoids with zero");

  // type-II membership is sweep-order independent
  for (const char* name :
       {"toy_b1", "toy_b2", "toy_b3", "small_c2", "mtf"}) {
    Built bu = load(name);
    std::vector<int> base = type_ii(bu.s).members;
    bool stable = true;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
      stable &= type_ii(bu.s, seed).members == base;
    c.expect(stable, std::string(name) + ": type-II set depends on the "
                                         "sweep order");
  }

  Outcome out;
  out.pass = c.ok;
  out.detail = c.ok ? "associativity exhaustive on 3 semigroups, lattice "
                      "laws exhaustive at 4 points, dual classification on "
                      "4 monoids, type-II stable over 20 sweep orders each"
                    : c.bad.str();
  return out;
}

}  // namespace

int main() {
  Outcome (*crit[])() = {criterion1, criterion2, criterion3, criterion4,
                         criterion5, criterion6, criterion7, criterion8};
  bool all_pass = true;
  for (int i = 0; i < 8; ++i) {
    Outcome out;
    try {
      out = crit[i]();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    std::printf("CRITERION %d: %s (%s)\n", i + 1, out.pass ? "PASS" : "FAIL",
                out.detail.c_str());
    for (const std::string& line : out.evidence)
      std::printf("    %s\n", line.c_str());
    all_pass &= out.pass;
  }
  if (!all_pass)
    std::printf("acceptance: at least one criterion failed (criterion 1's "
                "stated middle-class size is not attainable; see README)\n");
  return all_pass ? 0 : 1;
}
