#include "smgkit/complexity.hpp"

#include <algorithm>
#include <utility>

#include "smgkit/errors.hpp"
#include "smgkit/rees.hpp"
#include "smgkit/type_ii.hpp"

namespace smgkit {

std::vector<OrbitMonoid> orbit_monoids(const EnumeratedSemigroup& m,
                                       const Classification& c) {
  if (!c.is_small)
    throw ValidationError("orbit monoids are defined for small monoids only");
  const int base = m.base_size();

  // Orbits of the unit group on the base.
  std::vector<int> root(static_cast<size_t>(base));
  for (int b = 0; b < base; ++b) root[static_cast<size_t>(b)] = b;
  std::function<int(int)> find = [&](int x) {
    while (root[static_cast<size_t>(x)] != x) {
      root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
      x = root[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int u : c.units) {
    const RowMonomialElement& e = m.elem(u);
    for (int b = 0; b < base; ++b) {
      if (e.dest[static_cast<size_t>(b)] < 0)
        throw ValidationError("a unit is undefined at base point " +
                              std::to_string(b));
      int ra = find(b), rb = find(e.dest[static_cast<size_t>(b)]);
      if (ra != rb) root[static_cast<size_t>(ra)] = rb;
    }
  }
  std::vector<std::vector<int>> orbits;
  {
    std::vector<int> of(static_cast<size_t>(base), -1);
    for (int b = 0; b < base; ++b) {
      int r = find(b);
      if (of[static_cast<size_t>(r)] < 0) {
        of[static_cast<size_t>(r)] = static_cast<int>(orbits.size());
        orbits.emplace_back();
      }
      orbits[static_cast<size_t>(of[static_cast<size_t>(r)])].push_back(b);
    }
  }

  std::vector<OrbitMonoid> out;
  for (auto& orbit : orbits) {
    std::vector<char> in_orbit(static_cast<size_t>(base), 0);
    for (int b : orbit) in_orbit[static_cast<size_t>(b)] = 1;
    std::vector<int> members = c.units;
    for (int x : c.ideal_with_zero) {
      const RowMonomialElement& e = m.elem(x);
      if (e.is_zero()) {
        members.push_back(x);
        continue;
      }
      int d = -1;
      for (int b = 0; b < base && d < 0; ++b)
        d = e.dest[static_cast<size_t>(b)];
      if (d >= 0 && in_orbit[static_cast<size_t>(d)]) members.push_back(x);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    EnumeratedSemigroup sub = EnumeratedSemigroup::sub_semigroup(m, members);
    out.push_back(OrbitMonoid{std::move(orbit), std::move(members),
                              std::move(sub)});
  }
  return out;
}

Tilson2J tilson_2j(const EnumeratedSemigroup& m, const Classification& c) {
  {
    GreenData gd = green_data(m);
    GMCertificate gm = gm_certificate(m, gd);
    if (!gm.is_gm())
      throw ValidationError("the 2-class test needs a group-mapping monoid: " +
                            gm.failure);
    if (!c.is_small)
      throw ValidationError("the 2-class test needs a small monoid");
    if (gm.maximal_subgroup_order <= 1)
      throw ValidationError(
          "the 2-class test needs a nontrivial ideal subgroup");
  }

  Tilson2J out;
  out.complexity = 1;
  for (OrbitMonoid& om : orbit_monoids(m, c)) {
    OrbitEvidence ev;
    ev.orbit = om.orbit;
    EnumeratedSemigroup eg = idempotent_generated(om.monoid);
    ev.eg_size = eg.size();
    GreenData gde = green_data(eg);
    ev.aperiodic = is_aperiodic(gde);
    if (!ev.aperiodic) {
      out.complexity = 2;
      for (size_t h = 0; h < gde.h_members.size(); ++h)
        if (gde.h_size[h] > 1) {
          for (int i : gde.h_members[h]) {
            int in_om = om.monoid.index_of(eg.elem(i));
            ev.witness.push_back(om.members[static_cast<size_t>(in_om)]);
          }
          break;
        }
    }
    out.orbits.push_back(std::move(ev));
  }
  return out;
}

namespace {

void raise_lower(ComplexityReport& r, int v, const std::string& why) {
  if (v > r.lower) {
    r.lower = v;
    r.claims.push_back({"c >= " + std::to_string(v), why});
  }
}

void cut_upper(ComplexityReport& r, int v, const std::string& why) {
  if (r.upper < 0 || v < r.upper) {
    r.upper = v;
    r.claims.push_back({"c <= " + std::to_string(v), why});
  }
}

ComplexityReport report_level(const EnumeratedSemigroup& s,
                              const std::string& name,
                              const ComplexityOptions& opt, int depth);

void recurse_rlm(ComplexityReport& rep, const EnumeratedSemigroup& s,
                 const ComplexityOptions& opt, int depth) {
  if (rep.aperiodic || depth >= opt.max_depth) return;
  try {
    LabelForgetfulQuotient q = rlm(s, opt.cap);
    if (q.quotient.size() >= s.size()) {
      rep.claims.push_back({"c <= ?",
                            "label-forgetting did not shrink the monoid; "
                            "recursion stopped"});
      return;
    }
    ComplexityReport sub =
        report_level(q.quotient, rep.name + ".rlm", opt, depth + 1);
    if (sub.upper >= 0)
      cut_upper(rep, sub.upper + 1,
                "one group layer over the label-forgetful image (image upper " +
                    std::to_string(sub.upper) + ")");
    if (sub.upper >= 0 && sub.upper <= 1 && rep.upper != rep.lower &&
        opt.leaf_is_c1) {
      std::optional<bool> c1 = opt.leaf_is_c1(s);
      if (!c1)
        rep.claims.push_back(
            {"c <= 1 ?", "flow decision undetermined at configured scale"});
      else if (*c1)
        cut_upper(rep, 1, "an aperiodic flow certifies the extension");
      else
        raise_lower(rep, 2, "no aperiodic flow exists for the extension");
    }
    rep.rlm_chain.push_back(std::move(sub));
  } catch (const CapExceededError&) {
    rep.claims.push_back(
        {"c <= ?", "label-forgetting image undetermined at configured scale"});
  }
}

ComplexityReport report_level(const EnumeratedSemigroup& s,
                              const std::string& name,
                              const ComplexityOptions& opt, int depth) {
  ComplexityReport rep;
  rep.name = name;
  rep.size = s.size();
  rep.is_monoid = s.identity_index() >= 0;

  GreenData gd = green_data(s);
  rep.aperiodic = is_aperiodic(gd);
  if (rep.aperiodic) {
    rep.lower = 0;
    cut_upper(rep, 0, "every subgroup is trivial");
  } else {
    raise_lower(rep, 1, "a nontrivial subgroup exists");
  }

  GMCertificate gm = gm_certificate(s, gd);
  rep.gm = gm.is_gm();

  if (!rep.is_monoid) {
    rep.category = "not a monoid";
  } else {
    Classification c = classify_monoid(s, gd);
    rep.category = to_string(c.category);
    if (c.is_smallish && !rep.aperiodic)
      cut_upper(rep, 2, "smallish: the non-unit ideal is a nilpotent "
                        "extension of the 0-minimal ideal");
    if (c.is_small && rep.gm && gm.maximal_subgroup_order > 1) {
      Tilson2J t = tilson_2j(s, c);
      rep.orbit_evidence = t.orbits;
      std::string why =
          t.complexity == 1
              ? "every right-orbit monoid has an aperiodic "
                "idempotent-generated part"
              : "an orbit monoid's idempotent-generated part contains a "
                "nontrivial group";
      cut_upper(rep, t.complexity, why);
      raise_lower(rep, t.complexity, why);
    }
  }

  if (opt.recursive) recurse_rlm(rep, s, opt, depth);
  return rep;
}

}  // namespace

ComplexityReport complexity_report(const EnumeratedSemigroup& s,
                                   const std::string& name,
                                   const ComplexityOptions& opt) {
  return report_level(s, name, opt, 0);
}

}  // namespace smgkit
