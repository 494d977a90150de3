#include "smgkit/closure_relation.hpp"

#include <algorithm>

#include "smgkit/errors.hpp"

namespace smgkit {

BoolRelation::BoolRelation(int n_) : n(n_), w((n_ + 63) / 64) {
  bits.assign(static_cast<size_t>(n) * static_cast<size_t>(w), 0);
}

BoolRelation BoolRelation::identity(int n) {
  BoolRelation r(n);
  for (int i = 0; i < n; ++i) r.set(i, i);
  return r;
}

BoolRelation BoolRelation::diagonal(const std::vector<char>& dom) {
  BoolRelation r(static_cast<int>(dom.size()));
  for (int i = 0; i < r.n; ++i)
    if (dom[static_cast<size_t>(i)]) r.set(i, i);
  return r;
}

BoolRelation BoolRelation::product(const BoolRelation& o) const {
  if (n != o.n) throw ConsistencyError("relation product on different sets");
  BoolRelation r(n);
  for (int i = 0; i < n; ++i) {
    const uint64_t* row = &bits[static_cast<size_t>(i) * static_cast<size_t>(w)];
    uint64_t* out = &r.bits[static_cast<size_t>(i) * static_cast<size_t>(w)];
    for (int wi = 0; wi < w; ++wi) {
      uint64_t word = row[wi];
      while (word) {
        const int j = wi * 64 + __builtin_ctzll(word);
        word &= word - 1;
        const uint64_t* oj = &o.bits[static_cast<size_t>(j) * static_cast<size_t>(w)];
        for (int k = 0; k < w; ++k) out[k] |= oj[k];
      }
    }
  }
  return r;
}

bool BoolRelation::is_diagonal() const {
  for (int i = 0; i < n; ++i)
    for (int wi = 0; wi < w; ++wi) {
      uint64_t word = bits[static_cast<size_t>(i) * static_cast<size_t>(w) + wi];
      if (wi == (i >> 6)) word &= ~(uint64_t{1} << (i & 63));
      if (word) return false;
    }
  return true;
}

std::vector<char> BoolRelation::domain() const {
  std::vector<char> d(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int wi = 0; wi < w; ++wi)
      if (bits[static_cast<size_t>(i) * static_cast<size_t>(w) + wi]) {
        d[static_cast<size_t>(i)] = 1;
        break;
      }
  return d;
}

std::size_t BoolRelation::pair_count() const {
  std::size_t c = 0;
  for (uint64_t word : bits) c += static_cast<std::size_t>(__builtin_popcountll(word));
  return c;
}

std::size_t BoolRelation::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (uint64_t word : bits) {
    h ^= word;
    h *= 1099511628211ull;
  }
  return h;
}

LatticeHandle LatticeHandle::build(const Group& g, int base_size, std::size_t cap) {
  LatticeHandle lat;
  lat.group = g;
  lat.base = base_size;
  lat.n_points = g.order() * base_size;
  lat.elems = enumerate_sp(lat.n_points, cap);
  lat.index_of.reserve(lat.elems.size() * 2);
  for (size_t i = 0; i < lat.elems.size(); ++i)
    lat.index_of.emplace(lat.elems[i], static_cast<int>(i));
  const int n = lat.size();
  // meet table only while quadratic storage stays trivial
  if (n <= 512) {
    lat.tabled = true;
    lat.meet_tab.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        const int m = lat.index(sp_meet(lat.elems[static_cast<size_t>(a)],
                                        lat.elems[static_cast<size_t>(b)]));
        lat.meet_tab[static_cast<size_t>(a) * static_cast<size_t>(n) +
                     static_cast<size_t>(b)] = m;
        lat.meet_tab[static_cast<size_t>(b) * static_cast<size_t>(n) +
                     static_cast<size_t>(a)] = m;
      }
  }
  return lat;
}

int LatticeHandle::index(const SPElement& e) const {
  auto it = index_of.find(e);
  if (it == index_of.end())
    throw ConsistencyError("lattice handle: element not enumerated");
  return it->second;
}

int LatticeHandle::meet(int a, int b) const {
  if (tabled)
    return meet_tab[static_cast<size_t>(a) * static_cast<size_t>(elems.size()) +
                    static_cast<size_t>(b)];
  return index(sp_meet(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]));
}

bool LatticeHandle::leq(int a, int b) const {
  if (tabled) return meet(a, b) == a;
  return sp_leq(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]);
}

int LatticeHandle::top() const {
  return index(sp_top(n_points));
}

int LatticeHandle::bottom() const {
  return index(sp_bottom(n_points));
}

int LatticeHandle::point(int pt) const {
  return index(sp_singleton(n_points, pt));
}

std::string sp_transition_witness(const Group& g, const RowMonomialElement& act,
                                  const SPElement& Y, const SPElement& Z) {
  const int base = static_cast<int>(act.dest.size());
  std::vector<std::pair<int, int>> moved;
  for (int pt = 0; pt < Y.n_points(); ++pt) {
    if (!Y.contains(pt)) continue;
    auto r = rm_act(g, sp_point_group(pt, base), sp_point_base(pt, base), act);
    if (!r) continue;
    const int img = sp_point(r->first, r->second, base);
    if (!Z.contains(img))
      return "image point " + std::to_string(img) + " escapes the target";
    moved.emplace_back(pt, img);
  }
  for (size_t i = 0; i < moved.size(); ++i)
    for (size_t j = i + 1; j < moved.size(); ++j) {
      const bool before = Y.block_of[static_cast<size_t>(moved[i].first)] ==
                          Y.block_of[static_cast<size_t>(moved[j].first)];
      const bool after = Z.block_of[static_cast<size_t>(moved[i].second)] ==
                         Z.block_of[static_cast<size_t>(moved[j].second)];
      if (before != after)
        return "points " + std::to_string(moved[i].first) + ", " +
               std::to_string(moved[j].first) +
               (before ? " split by the letter" : " merged by the letter");
    }
  return "";
}

BoolRelation free_flow(const LatticeHandle& lat, const RowMonomialElement& act) {
  const int n = lat.size();
  BoolRelation r(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (sp_transition_witness(lat.group, act, lat.elems[static_cast<size_t>(p)],
                                lat.elems[static_cast<size_t>(q)])
              .empty())
        r.set(p, q);
  return r;
}

ClosureCheck closure_check(const LatticeHandle& lat, const BoolRelation& r) {
  ClosureCheck c;
  const int t = lat.top();
  if (!r.get(t, t)) {
    c.witness = "(top, top) missing";
    return c;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < r.n; ++p)
    for (int q = 0; q < r.n; ++q)
      if (r.get(p, q)) pairs.emplace_back(p, q);
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j) {
      const int mp = lat.meet(pairs[i].first, pairs[j].first);
      const int mq = lat.meet(pairs[i].second, pairs[j].second);
      if (!r.get(mp, mq)) {
        c.witness = "meet of (" + std::to_string(pairs[i].first) + "," +
                    std::to_string(pairs[i].second) + ") and (" +
                    std::to_string(pairs[j].first) + "," +
                    std::to_string(pairs[j].second) + ") escapes";
        return c;
      }
    }
  c.ok = true;
  return c;
}

BoolRelation back_flow(const BoolRelation& f) {
  return BoolRelation::diagonal(f.domain());
}

BoolRelation kleene_part(const BoolRelation& f) {
  std::vector<char> fix(static_cast<size_t>(f.n), 0);
  for (int i = 0; i < f.n; ++i) fix[static_cast<size_t>(i)] = f.get(i, i) ? 1 : 0;
  return BoolRelation::diagonal(fix);
}

BoolRelation omega_power(const BoolRelation& f, std::size_t iter_cap) {
  BoolRelation g = f;
  for (std::size_t i = 0; i < iter_cap; ++i) {
    if (g.product(g) == g) return g;
    g = g.product(f);
  }
  throw CapExceededError("idempotent power iteration", iter_cap);
}

BoolRelation loop_power(const BoolRelation& f, std::size_t iter_cap) {
  return omega_power(f, iter_cap).product(kleene_part(f));
}

std::vector<int> forward_table(const LatticeHandle& lat, const BoolRelation& f) {
  const int n = lat.size();
  // least right coordinate per nonempty row
  std::vector<int> rowmeet(static_cast<size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    int acc = -1;
    for (int q = 0; q < n; ++q)
      if (f.get(p, q)) acc = acc < 0 ? q : lat.meet(acc, q);
    rowmeet[static_cast<size_t>(p)] = acc;
  }
  std::vector<int> fwd(static_cast<size_t>(n), -1);
  for (int l = 0; l < n; ++l) {
    int acc = -1;
    for (int p = 0; p < n; ++p) {
      if (rowmeet[static_cast<size_t>(p)] < 0) continue;
      if (!lat.leq(l, p)) continue;
      const int q = rowmeet[static_cast<size_t>(p)];
      acc = acc < 0 ? q : lat.meet(acc, q);
    }
    fwd[static_cast<size_t>(l)] = acc;
  }
  return fwd;
}

namespace {

// image point of a covered point under the letter, -1 when undefined
int act_image(const Group& g, const RowMonomialElement& act, int pt, int base) {
  auto r = rm_act(g, sp_point_group(pt, base), sp_point_base(pt, base), act);
  return r ? sp_point(r->first, r->second, base) : -1;
}

}  // namespace

SPElement free_flow_forward(const Group& g, const RowMonomialElement& act,
                            const SPElement& l) {
  const int base = static_cast<int>(act.dest.size());
  const int np = l.n_points();
  // merge source blocks that collide onto one image point, transitively
  std::vector<int> blk = l.block_of;
  int nb = 0;
  for (int v : blk) nb = std::max(nb, v + 1);
  std::vector<int> parent(static_cast<size_t>(std::max(nb, 1)));
  for (int i = 0; i < nb; ++i) parent[static_cast<size_t>(i)] = i;
  auto root = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  };
  std::vector<int> img(static_cast<size_t>(np), -1);
  std::vector<int> by_img(static_cast<size_t>(np), -1);
  for (int pt = 0; pt < np; ++pt) {
    if (!l.contains(pt)) continue;
    const int ip = act_image(g, act, pt, base);
    if (ip < 0) continue;
    img[static_cast<size_t>(pt)] = ip;
    int& owner = by_img[static_cast<size_t>(ip)];
    if (owner < 0)
      owner = pt;
    else {
      const int a = root(blk[static_cast<size_t>(owner)]);
      const int b = root(blk[static_cast<size_t>(pt)]);
      if (a != b) parent[static_cast<size_t>(b)] = a;
    }
  }
  SPElement out;
  out.block_of.assign(static_cast<size_t>(np), -1);
  for (int pt = 0; pt < np; ++pt)
    if (img[static_cast<size_t>(pt)] >= 0)
      out.block_of[static_cast<size_t>(img[static_cast<size_t>(pt)])] =
          root(blk[static_cast<size_t>(pt)]);
  sp_normalize(out);
  return out;
}

SPElement least_letter_stable(const Group& g, const RowMonomialElement& act,
                              const SPElement& l) {
  // Forced growth: the support must absorb images, colliding sources must
  // merge, and sources whose images share a block must merge. Each pass
  // either grows the support or coarsens the partition, so the fixpoint
  // arrives quickly and is below every stable element above l.
  const int base = static_cast<int>(act.dest.size());
  SPElement cur = l;
  const std::size_t cap = 10000;
  for (std::size_t it = 0; it < cap; ++it) {
    SPElement next = sp_join(cur, free_flow_forward(g, act, cur));
    // merge closure on sources with merged images
    bool merged = true;
    while (merged) {
      merged = false;
      const int np = next.n_points();
      for (int y = 0; y < np; ++y) {
        if (!next.contains(y)) continue;
        const int iy = act_image(g, act, y, base);
        if (iy < 0) continue;
        for (int z = y + 1; z < np; ++z) {
          if (!next.contains(z)) continue;
          const int iz = act_image(g, act, z, base);
          if (iz < 0) continue;
          if (next.block_of[static_cast<size_t>(iy)] !=
              next.block_of[static_cast<size_t>(iz)])
            continue;
          const int by = next.block_of[static_cast<size_t>(y)];
          const int bz = next.block_of[static_cast<size_t>(z)];
          if (by == bz) continue;
          for (int p = 0; p < np; ++p)
            if (next.block_of[static_cast<size_t>(p)] == bz)
              next.block_of[static_cast<size_t>(p)] = by;
          merged = true;
        }
      }
    }
    sp_normalize(next);
    if (next == cur) {
      const std::string w = sp_transition_witness(g, act, cur, cur);
      if (!w.empty())
        throw ConsistencyError("letter stabilization fixpoint unstable: " + w);
      return cur;
    }
    cur = std::move(next);
  }
  throw CapExceededError("letter stabilization", cap);
}

}  // namespace smgkit
