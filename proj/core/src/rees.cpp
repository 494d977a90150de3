#include "smgkit/rees.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "smgkit/errors.hpp"

namespace smgkit {

void ReesStructure::validate() const {
  if (a_names.empty() || b_names.empty())
    throw ValidationError("rees: empty A or B index set");
  if (static_cast<int>(c_t.size()) != num_a())
    throw ValidationError("rees: matrix has " + std::to_string(c_t.size()) +
                          " columns, expected " + std::to_string(num_a()));
  for (int a = 0; a < num_a(); ++a) {
    if (static_cast<int>(c_t[static_cast<size_t>(a)].size()) != num_b())
      throw ValidationError("rees: column " + a_names[static_cast<size_t>(a)] +
                            " has wrong length");
    for (int b = 0; b < num_b(); ++b) {
      int v = c(b, a);
      if (v < -1 || v >= group.order())
        throw ValidationError("rees: entry C(" +
                              b_names[static_cast<size_t>(b)] + "," +
                              a_names[static_cast<size_t>(a)] +
                              ") out of range");
    }
  }
  for (int a = 0; a < num_a(); ++a) {
    bool nonzero = false;
    for (int b = 0; b < num_b(); ++b) nonzero |= c(b, a) >= 0;
    if (!nonzero)
      throw ValidationError("rees: column " + a_names[static_cast<size_t>(a)] +
                            " of C is zero");
  }
  for (int b = 0; b < num_b(); ++b) {
    bool nonzero = false;
    for (int a = 0; a < num_a(); ++a) nonzero |= c(b, a) >= 0;
    if (!nonzero)
      throw ValidationError("rees: row " + b_names[static_cast<size_t>(b)] +
                            " of C is zero");
  }
}

RowMonomialElement rees_triple_element(const ReesStructure& rs, ReesTriple t) {
  RowMonomialElement e = rm_zero(rs.num_b());
  for (int i = 0; i < rs.num_b(); ++i) {
    int ci = rs.c(i, t.a);
    if (ci < 0) continue;
    e.dest[static_cast<size_t>(i)] = t.b;
    e.label[static_cast<size_t>(i)] = rs.group.mul(ci, t.g);
  }
  return e;
}

std::optional<ReesTriple> rees_product(const ReesStructure& rs, ReesTriple x,
                                       ReesTriple y) {
  int link = rs.c(x.b, y.a);
  if (link < 0) return std::nullopt;
  return ReesTriple{x.a, rs.group.mul(x.g, rs.group.mul(link, y.g)), y.b};
}

std::optional<ReesTriple> rees_decode(const ReesStructure& rs,
                                      const RowMonomialElement& e) {
  if (e.is_zero()) return std::nullopt;
  int b = -1;
  for (int i = 0; i < rs.num_b(); ++i)
    if (e.defined_at(i)) {
      if (b < 0) b = e.dest[static_cast<size_t>(i)];
      if (e.dest[static_cast<size_t>(i)] != b) return std::nullopt;
    }
  for (int a = 0; a < rs.num_a(); ++a) {
    int g = -1;
    bool ok = true;
    for (int i = 0; i < rs.num_b() && ok; ++i) {
      bool want = rs.c(i, a) >= 0;
      if (want != e.defined_at(i)) {
        ok = false;
        break;
      }
      if (!want) continue;
      int cand = rs.group.mul(rs.group.inv(rs.c(i, a)),
                              e.label[static_cast<size_t>(i)]);
      if (g < 0)
        g = cand;
      else if (g != cand)
        ok = false;
    }
    if (ok && g >= 0) return ReesTriple{a, g, b};
  }
  return std::nullopt;
}

ZeroMinimalIdeal zero_minimal_ideal(const EnumeratedSemigroup& s,
                                    const GreenData& gd) {
  if (s.zero_index() < 0)
    throw ValidationError("zero_minimal_ideal: semigroup has no zero");
  int zclass = gd.j_of[static_cast<size_t>(s.zero_index())];
  std::vector<int> minimal;
  for (int j = 0; j < gd.num_j(); ++j) {
    if (j == zclass) continue;
    // Strictly below j there must be nothing but the zero class.
    bool ok = true;
    for (int k = 0; k < gd.num_j() && ok; ++k)
      if (k != j && k != zclass && gd.j_leq[static_cast<size_t>(k)][static_cast<size_t>(j)])
        ok = false;
    if (ok && gd.j_leq[static_cast<size_t>(zclass)][static_cast<size_t>(j)])
      minimal.push_back(j);
  }
  if (minimal.empty())
    throw ValidationError("zero_minimal_ideal: no 0-minimal ideal");
  if (minimal.size() > 1)
    throw ValidationError(
        "zero_minimal_ideal: several 0-minimal ideals, witness classes " +
        std::to_string(minimal[0]) + " and " + std::to_string(minimal[1]));

  ZeroMinimalIdeal zmi;
  zmi.j_class = minimal[0];
  zmi.nonzero = gd.j_members[static_cast<size_t>(zmi.j_class)];
  bool direct = false;
  for (int x : zmi.nonzero) {
    for (int y : zmi.nonzero)
      if (s.mul(x, y) != s.zero_index()) {
        direct = true;
        break;
      }
    if (direct) break;
  }
  if (direct != static_cast<bool>(gd.j_regular[static_cast<size_t>(zmi.j_class)]))
    throw ConsistencyError(
        "zero_minimal_ideal: the ideal squares to zero yet the class is "
        "regular, or vice versa");
  zmi.zero_simple = direct;
  return zmi;
}

namespace {

// Signature of the left or right translation restricted to the ideal.
struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Returns a witness pair (s, t) of distinct elements with equal action, or
// (-1, -1) when the action is faithful.
std::pair<int, int> action_collision(const EnumeratedSemigroup& s,
                                     const std::vector<int>& ideal,
                                     bool right) {
  std::unordered_map<std::vector<int>, int, VecHash> seen;
  for (int t = 0; t < s.size(); ++t) {
    std::vector<int> sig;
    sig.reserve(ideal.size());
    for (int x : ideal) sig.push_back(right ? s.mul(x, t) : s.mul(t, x));
    auto [it, fresh] = seen.emplace(std::move(sig), t);
    if (!fresh) return {it->second, t};
  }
  return {-1, -1};
}

}  // namespace

GMCertificate gm_certificate(const EnumeratedSemigroup& s,
                             const GreenData& gd) {
  GMCertificate cert;
  ZeroMinimalIdeal zmi;
  try {
    zmi = zero_minimal_ideal(s, gd);
  } catch (const ValidationError& err) {
    cert.failure = err.what();
    return cert;
  }
  cert.has_zero_minimal_ideal = true;
  cert.ideal_nonzero = zmi.nonzero;
  cert.ideal_zero_simple = zmi.zero_simple;
  if (!zmi.zero_simple) {
    cert.failure = "0-minimal ideal is null (squares to zero)";
    return cert;
  }

  std::vector<int> ideal = zmi.nonzero;
  ideal.push_back(s.zero_index());

  auto [rs1, rt1] = action_collision(s, ideal, /*right=*/true);
  cert.right_faithful = rs1 < 0;
  auto [ls1, lt1] = action_collision(s, ideal, /*right=*/false);
  cert.left_faithful = ls1 < 0;
  if (!cert.right_faithful) {
    cert.failure = "right action on the ideal identifies elements " +
                   std::to_string(rs1) + " and " + std::to_string(rt1);
    return cert;
  }
  if (!cert.left_faithful) {
    cert.failure = "left action on the ideal identifies elements " +
                   std::to_string(ls1) + " and " + std::to_string(lt1);
    return cert;
  }

  for (int x : zmi.nonzero)
    if (s.is_idempotent(x)) {
      cert.maximal_subgroup_order =
          gd.h_size[static_cast<size_t>(gd.h_of[static_cast<size_t>(x)])];
      break;
    }
  cert.group_nontrivial = cert.maximal_subgroup_order > 1;
  if (!cert.group_nontrivial)
    cert.failure = "maximal subgroup of the ideal is trivial";
  return cert;
}

Coordinatization coordinatize(const EnumeratedSemigroup& s,
                              const GreenData& gd,
                              const ZeroMinimalIdeal& zmi) {
  if (!zmi.zero_simple)
    throw ValidationError("coordinatize: ideal is not 0-simple");
  Coordinatization co;

  for (int x : zmi.nonzero)
    if (s.is_idempotent(x)) {
      co.e = x;
      break;
    }
  if (co.e < 0)
    throw ConsistencyError("coordinatize: 0-simple ideal without idempotent");

  // A := R-classes, B := L-classes of the nonzero part, by smallest member.
  std::vector<int> r_ids, l_ids;
  for (int x : zmi.nonzero) {
    if (std::find(r_ids.begin(), r_ids.end(), gd.r_of[static_cast<size_t>(x)]) ==
        r_ids.end())
      r_ids.push_back(gd.r_of[static_cast<size_t>(x)]);
    if (std::find(l_ids.begin(), l_ids.end(), gd.l_of[static_cast<size_t>(x)]) ==
        l_ids.end())
      l_ids.push_back(gd.l_of[static_cast<size_t>(x)]);
  }
  int na = static_cast<int>(r_ids.size()), nb = static_cast<int>(l_ids.size());
  auto a_of = [&](int x) {
    return static_cast<int>(std::find(r_ids.begin(), r_ids.end(),
                                      gd.r_of[static_cast<size_t>(x)]) -
                            r_ids.begin());
  };
  auto b_of = [&](int x) {
    return static_cast<int>(std::find(l_ids.begin(), l_ids.end(),
                                      gd.l_of[static_cast<size_t>(x)]) -
                            l_ids.begin());
  };

  co.h = maximal_subgroup(s, gd, gd.h_of[static_cast<size_t>(co.e)]);
  std::vector<int> gpos(static_cast<size_t>(s.size()), -1);
  for (size_t g = 0; g < co.h.elements.size(); ++g)
    gpos[static_cast<size_t>(co.h.elements[g])] = static_cast<int>(g);

  co.q.assign(static_cast<size_t>(na), -1);
  co.r.assign(static_cast<size_t>(nb), -1);
  for (int x : zmi.nonzero) {
    if (gd.l_of[static_cast<size_t>(x)] == gd.l_of[static_cast<size_t>(co.e)] &&
        co.q[static_cast<size_t>(a_of(x))] < 0)
      co.q[static_cast<size_t>(a_of(x))] = x;
    if (gd.r_of[static_cast<size_t>(x)] == gd.r_of[static_cast<size_t>(co.e)] &&
        co.r[static_cast<size_t>(b_of(x))] < 0)
      co.r[static_cast<size_t>(b_of(x))] = x;
  }
  for (int a = 0; a < na; ++a)
    if (co.q[static_cast<size_t>(a)] < 0)
      throw ConsistencyError("coordinatize: empty H-class R_" +
                             std::to_string(a) + " meet L_e");
  for (int b = 0; b < nb; ++b)
    if (co.r[static_cast<size_t>(b)] < 0)
      throw ConsistencyError("coordinatize: empty H-class R_e meet L_" +
                             std::to_string(b));

  co.rees.group = co.h.group;
  for (int a = 0; a < na; ++a) co.rees.a_names.push_back("A" + std::to_string(a + 1));
  for (int b = 0; b < nb; ++b) co.rees.b_names.push_back("B" + std::to_string(b + 1));
  co.rees.c_t.assign(static_cast<size_t>(na),
                     std::vector<int>(static_cast<size_t>(nb), -1));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) {
      int prod = s.mul(co.r[static_cast<size_t>(b)], co.q[static_cast<size_t>(a)]);
      if (prod == s.zero_index()) continue;
      if (gpos[static_cast<size_t>(prod)] < 0)
        throw ConsistencyError("coordinatize: structure product lands outside "
                               "the base H-class");
      co.rees.c_t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          gpos[static_cast<size_t>(prod)];
    }
  co.rees.validate();

  int gn = co.rees.group.order();
  co.elem_of_triple.assign(static_cast<size_t>(na) * static_cast<size_t>(gn) *
                               static_cast<size_t>(nb),
                           -1);
  co.triple_of.assign(zmi.nonzero.size(), ReesTriple{-1, -1, -1});
  for (size_t i = 0; i < zmi.nonzero.size(); ++i) {
    int x = zmi.nonzero[i];
    int a = a_of(x), b = b_of(x);
    int found = -1;
    for (int g = 0; g < gn; ++g) {
      int cand = s.mul(s.mul(co.q[static_cast<size_t>(a)],
                             co.h.elements[static_cast<size_t>(g)]),
                       co.r[static_cast<size_t>(b)]);
      if (cand == x) {
        if (found >= 0)
          throw ConsistencyError("coordinatize: triple for element " +
                                 std::to_string(x) + " is not unique");
        found = g;
      }
    }
    if (found < 0)
      throw ConsistencyError("coordinatize: no triple for element " +
                             std::to_string(x));
    co.triple_of[i] = ReesTriple{a, found, b};
    co.elem_of_triple[(static_cast<size_t>(a) * static_cast<size_t>(gn) +
                       static_cast<size_t>(found)) *
                          static_cast<size_t>(nb) +
                      static_cast<size_t>(b)] = x;
  }
  return co;
}

NormalizedRees normalize_rees(const ReesStructure& rs, int a0) {
  NormalizedRees out;
  out.p.assign(static_cast<size_t>(rs.num_b()), rs.group.identity());
  for (int b = 0; b < rs.num_b(); ++b) {
    int v = rs.c(b, a0);
    if (v >= 0) out.p[static_cast<size_t>(b)] = rs.group.inv(v);
  }
  out.rees = rs;
  for (int a = 0; a < rs.num_a(); ++a)
    for (int b = 0; b < rs.num_b(); ++b) {
      int v = rs.c(b, a);
      if (v < 0) continue;
      out.rees.c_t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          rs.group.mul(out.p[static_cast<size_t>(b)], v);
    }
  return out;
}

namespace {

void all_group_isos(const Group& g, const Group& h,
                    std::vector<std::vector<int>>& out) {
  if (g.order() != h.order()) return;
  std::vector<int> perm(static_cast<size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  // Identity must map to identity; permute the rest.
  std::vector<int> rest(perm.begin() + 1, perm.end());
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<int> f(static_cast<size_t>(g.order()));
    f[0] = 0;
    for (size_t i = 0; i < rest.size(); ++i) f[i + 1] = rest[i];
    bool ok = true;
    for (int a = 0; a < g.order() && ok; ++a)
      for (int b = 0; b < g.order() && ok; ++b)
        if (f[static_cast<size_t>(g.mul(a, b))] !=
            h.mul(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)]))
          ok = false;
    if (ok) out.push_back(f);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

bool rees_isomorphic(const ReesStructure& x, const ReesStructure& y) {
  if (x.num_a() != y.num_a() || x.num_b() != y.num_b()) return false;
  std::vector<std::vector<int>> isos;
  all_group_isos(x.group, y.group, isos);
  if (isos.empty()) return false;

  std::vector<int> tau(static_cast<size_t>(x.num_a()));
  std::iota(tau.begin(), tau.end(), 0);
  const int gn = y.group.order();
  for (const auto& phi : isos) {
    std::vector<int> tperm = tau;
    do {
      // Column scalings v_a, enumerated as mixed-radix digits.
      std::vector<int> v(static_cast<size_t>(x.num_a()), 0);
      while (true) {
        // Each source row must match some target row after a left scaling;
        // distinct rows must hit distinct targets.
        std::vector<char> used(static_cast<size_t>(x.num_b()), 0);
        bool all_rows = true;
        for (int b = 0; b < x.num_b() && all_rows; ++b) {
          bool placed = false;
          for (int b2 = 0; b2 < y.num_b() && !placed; ++b2) {
            if (used[static_cast<size_t>(b2)]) continue;
            int u = -2;  // unknown
            bool ok = true;
            for (int a = 0; a < x.num_a() && ok; ++a) {
              int lhs = x.c(b, a);
              int rhs = y.c(b2, tperm[static_cast<size_t>(a)]);
              if ((lhs < 0) != (rhs < 0)) {
                ok = false;
                break;
              }
              if (lhs < 0) continue;
              int scaled =
                  y.group.mul(phi[static_cast<size_t>(lhs)], v[static_cast<size_t>(a)]);
              int cand = y.group.mul(rhs, y.group.inv(scaled));
              if (u == -2)
                u = cand;
              else if (u != cand)
                ok = false;
            }
            if (ok) {
              used[static_cast<size_t>(b2)] = 1;
              placed = true;
            }
          }
          all_rows = placed;
        }
        if (all_rows) return true;
        int d = 0;
        while (d < x.num_a() && v[static_cast<size_t>(d)] == gn - 1) {
          v[static_cast<size_t>(d)] = 0;
          ++d;
        }
        if (d == x.num_a()) break;
        ++v[static_cast<size_t>(d)];
      }
    } while (std::next_permutation(tperm.begin(), tperm.end()));
  }
  return false;
}

}  // namespace smgkit
