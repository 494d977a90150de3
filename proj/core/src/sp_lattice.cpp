#include "smgkit/sp_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "smgkit/errors.hpp"

namespace smgkit {

bool SPElement::empty() const {
  for (int b : block_of)
    if (b >= 0) return false;
  return true;
}

int SPElement::support_size() const {
  int n = 0;
  for (int b : block_of)
    if (b >= 0) ++n;
  return n;
}

int SPElement::block_count() const {
  int mx = -1;
  for (int b : block_of) mx = std::max(mx, b);
  return mx + 1;
}

std::vector<std::vector<int>> SPElement::blocks() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(block_count()));
  for (int p = 0; p < n_points(); ++p)
    if (block_of[static_cast<size_t>(p)] >= 0)
      out[static_cast<size_t>(block_of[static_cast<size_t>(p)])].push_back(p);
  return out;
}

std::size_t SPElementHash::operator()(const SPElement& e) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int b : e.block_of) h = h * 1099511628211ull + static_cast<std::size_t>(b + 2);
  return h;
}

void sp_normalize(SPElement& e) {
  std::vector<int> remap(e.block_of.size(), -1);
  int next = 0;
  for (int& b : e.block_of) {
    if (b < 0) {
      b = -1;
      continue;
    }
    if (remap[static_cast<size_t>(b)] < 0) remap[static_cast<size_t>(b)] = next++;
    b = remap[static_cast<size_t>(b)];
  }
}

SPElement sp_bottom(int n_points) {
  return SPElement{std::vector<int>(static_cast<size_t>(n_points), -1)};
}

SPElement sp_top(int n_points) {
  return SPElement{std::vector<int>(static_cast<size_t>(n_points), 0)};
}

SPElement sp_singleton(int n_points, int p) {
  SPElement e = sp_bottom(n_points);
  e.block_of[static_cast<size_t>(p)] = 0;
  return e;
}

SPElement sp_from_blocks(int n_points, const std::vector<std::vector<int>>& blocks) {
  SPElement e = sp_bottom(n_points);
  for (size_t i = 0; i < blocks.size(); ++i)
    for (int p : blocks[i]) {
      if (p < 0 || p >= n_points)
        throw ValidationError("sp_from_blocks: point " + std::to_string(p) +
                              " outside the point set");
      if (e.block_of[static_cast<size_t>(p)] >= 0)
        throw ValidationError("sp_from_blocks: point " + std::to_string(p) +
                              " listed in two blocks");
      e.block_of[static_cast<size_t>(p)] = static_cast<int>(i);
    }
  sp_normalize(e);
  return e;
}

bool sp_leq(const SPElement& p, const SPElement& q) {
  const int n = p.n_points();
  // For each p-block, the q-block of its first member; -1 until seen.
  std::vector<int> image(static_cast<size_t>(p.block_count()), -1);
  for (int i = 0; i < n; ++i) {
    const int bp = p.block_of[static_cast<size_t>(i)];
    if (bp < 0) continue;
    const int bq = q.block_of[static_cast<size_t>(i)];
    if (bq < 0) return false;  // support not contained
    if (image[static_cast<size_t>(bp)] < 0)
      image[static_cast<size_t>(bp)] = bq;
    else if (image[static_cast<size_t>(bp)] != bq)
      return false;  // p-block split across q-blocks
  }
  return true;
}

SPElement sp_meet(const SPElement& p, const SPElement& q) {
  const int n = p.n_points();
  SPElement out = sp_bottom(n);
  // Common refinement: points sharing both block ids share a meet block.
  std::vector<std::pair<long long, int>> seen;  // (packed id pair, block)
  for (int i = 0; i < n; ++i) {
    const int bp = p.block_of[static_cast<size_t>(i)];
    const int bq = q.block_of[static_cast<size_t>(i)];
    if (bp < 0 || bq < 0) continue;
    const long long key = static_cast<long long>(bp) * (q.block_count() + 1) + bq;
    int id = -1;
    for (const auto& [k, v] : seen)
      if (k == key) {
        id = v;
        break;
      }
    if (id < 0) {
      id = static_cast<int>(seen.size());
      seen.emplace_back(key, id);
    }
    out.block_of[static_cast<size_t>(i)] = id;
  }
  sp_normalize(out);
  return out;
}

namespace {

int uf_find(std::vector<int>& up, int x) {
  while (up[static_cast<size_t>(x)] != x) {
    up[static_cast<size_t>(x)] = up[static_cast<size_t>(up[static_cast<size_t>(x)])];
    x = up[static_cast<size_t>(x)];
  }
  return x;
}

void uf_union(std::vector<int>& up, int a, int b) {
  up[static_cast<size_t>(uf_find(up, a))] = uf_find(up, b);
}

}  // namespace

SPElement sp_join(const SPElement& p, const SPElement& q) {
  const int n = p.n_points();
  std::vector<int> up(static_cast<size_t>(n));
  std::iota(up.begin(), up.end(), 0);
  std::vector<bool> in(static_cast<size_t>(n), false);
  auto absorb = [&](const SPElement& e) {
    std::vector<int> first(static_cast<size_t>(e.block_count()), -1);
    for (int i = 0; i < n; ++i) {
      const int b = e.block_of[static_cast<size_t>(i)];
      if (b < 0) continue;
      in[static_cast<size_t>(i)] = true;
      if (first[static_cast<size_t>(b)] < 0)
        first[static_cast<size_t>(b)] = i;
      else
        uf_union(up, first[static_cast<size_t>(b)], i);
    }
  };
  absorb(p);
  absorb(q);
  SPElement out = sp_bottom(n);
  for (int i = 0; i < n; ++i)
    if (in[static_cast<size_t>(i)]) out.block_of[static_cast<size_t>(i)] = uf_find(up, i);
  sp_normalize(out);
  return out;
}

bool is_cross_section(const SPElement& p, int base_size) {
  const int n = p.n_points();
  std::vector<int> label(static_cast<size_t>(base_size), -1);
  for (int i = 0; i < n; ++i) {
    if (p.block_of[static_cast<size_t>(i)] < 0) continue;
    const int b = sp_point_base(i, base_size);
    const int g = sp_point_group(i, base_size);
    if (label[static_cast<size_t>(b)] >= 0 && label[static_cast<size_t>(b)] != g)
      return false;
    label[static_cast<size_t>(b)] = g;
  }
  return true;
}

bool sp_blocks_consistent(const SPElement& p, int base_size) {
  const int n = p.n_points();
  // (block, base point) pairs may not repeat with different labels; a
  // repeat at all means two labels since points are distinct
  std::vector<std::pair<int, int>> seen;
  for (int i = 0; i < n; ++i) {
    const int blk = p.block_of[static_cast<size_t>(i)];
    if (blk < 0) continue;
    const std::pair<int, int> key{blk, sp_point_base(i, base_size)};
    for (const auto& k : seen)
      if (k == key) return false;
    seen.push_back(key);
  }
  return true;
}

namespace {

// Emits every partition of the listed points via restricted growth
// strings, in lexicographic order.
void emit_partitions(const std::vector<int>& pts, int n_points,
                     std::vector<SPElement>& out, std::size_t cap) {
  const int k = static_cast<int>(pts.size());
  std::vector<int> rgs(static_cast<size_t>(k), 0);
  for (;;) {
    SPElement e = sp_bottom(n_points);
    for (int i = 0; i < k; ++i)
      e.block_of[static_cast<size_t>(pts[static_cast<size_t>(i)])] =
          rgs[static_cast<size_t>(i)];
    out.push_back(std::move(e));
    if (out.size() > cap)
      throw CapExceededError("enumerate_sp: lattice larger than cap " +
                                 std::to_string(cap),
                             out.size());
    // next restricted growth string
    int i = k - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j)
        mx = std::max(mx, rgs[static_cast<size_t>(j)] + 1);
      if (rgs[static_cast<size_t>(i)] < mx) {
        ++rgs[static_cast<size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) return;
  }
}

}  // namespace

std::vector<SPElement> enumerate_sp(int n_points, std::size_t cap) {
  if (n_points >= 31)
    throw CapExceededError("enumerate_sp: point set too large", 0);
  std::vector<SPElement> out;
  for (unsigned mask = 0; mask < (1u << n_points); ++mask) {
    std::vector<int> pts;
    for (int p = 0; p < n_points; ++p)
      if (mask & (1u << p)) pts.push_back(p);
    if (pts.empty()) {
      out.push_back(sp_bottom(n_points));
      continue;
    }
    emit_partitions(pts, n_points, out, cap);
  }
  return out;
}

std::string sp_format(const SPElement& e, const Group& g, int base_size,
                      const std::vector<std::string>& b_names) {
  if (e.empty()) return "[]";
  std::ostringstream os;
  os << "[";
  bool first_block = true;
  for (const auto& blk : e.blocks()) {
    if (!first_block) os << " | ";
    first_block = false;
    bool first = true;
    for (int p : blk) {
      if (!first) os << ", ";
      first = false;
      os << g.name(sp_point_group(p, base_size)) << "."
         << b_names[static_cast<size_t>(sp_point_base(p, base_size))];
    }
  }
  os << "]";
  return os.str();
}

bool RhodesElement::empty() const {
  for (int b : block_of)
    if (b >= 0) return false;
  return true;
}

std::vector<std::vector<int>> RhodesElement::blocks() const {
  int mx = -1;
  for (int b : block_of) mx = std::max(mx, b);
  std::vector<std::vector<int>> out(static_cast<size_t>(mx + 1));
  for (int b = 0; b < base_size(); ++b)
    if (block_of[static_cast<size_t>(b)] >= 0)
      out[static_cast<size_t>(block_of[static_cast<size_t>(b)])].push_back(b);
  return out;
}

void rh_normalize(const Group& g, RhodesElement& e) {
  std::vector<int> remap;
  std::vector<int> scale;  // left factor per new block id
  std::vector<int> old_to_new(e.block_of.size(), -1);
  int next = 0;
  for (int b = 0; b < e.base_size(); ++b) {
    int& blk = e.block_of[static_cast<size_t>(b)];
    if (blk < 0) {
      blk = -1;
      e.value[static_cast<size_t>(b)] = -1;
      continue;
    }
    if (old_to_new[static_cast<size_t>(blk)] < 0) {
      old_to_new[static_cast<size_t>(blk)] = next++;
      // first (minimal) point of the block fixes the scaling
      scale.push_back(g.inv(e.value[static_cast<size_t>(b)]));
    }
    blk = old_to_new[static_cast<size_t>(blk)];
    e.value[static_cast<size_t>(b)] =
        g.mul(scale[static_cast<size_t>(blk)], e.value[static_cast<size_t>(b)]);
  }
}

RhodesElement rh_bottom(int base_size) {
  return RhodesElement{std::vector<int>(static_cast<size_t>(base_size), -1),
                       std::vector<int>(static_cast<size_t>(base_size), -1)};
}

RhodesElement rh_from_blocks(const Group& g, int base_size,
                             const std::vector<std::vector<int>>& blocks,
                             const std::vector<std::vector<int>>& values) {
  if (blocks.size() != values.size())
    throw ValidationError("rh_from_blocks: block/value list size mismatch");
  RhodesElement e = rh_bottom(base_size);
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != values[i].size())
      throw ValidationError("rh_from_blocks: block " + std::to_string(i) +
                            " has " + std::to_string(blocks[i].size()) +
                            " points but " + std::to_string(values[i].size()) +
                            " values");
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      const int b = blocks[i][j];
      if (b < 0 || b >= base_size)
        throw ValidationError("rh_from_blocks: base point " + std::to_string(b) +
                              " out of range");
      if (e.block_of[static_cast<size_t>(b)] >= 0)
        throw ValidationError("rh_from_blocks: base point " + std::to_string(b) +
                              " listed in two blocks");
      e.block_of[static_cast<size_t>(b)] = static_cast<int>(i);
      e.value[static_cast<size_t>(b)] = values[i][j];
    }
  }
  rh_normalize(g, e);
  return e;
}

SPElement rh_embed(const Group& g, const RhodesElement& r) {
  const int nb = r.base_size();
  SPElement out = sp_bottom(g.order() * nb);
  for (int b = 0; b < nb; ++b) {
    const int blk = r.block_of[static_cast<size_t>(b)];
    if (blk < 0) continue;
    out.block_of[static_cast<size_t>(
        sp_point(r.value[static_cast<size_t>(b)], b, nb))] = blk;
  }
  sp_normalize(out);
  return out;
}

SPElement rh_saturate(const Group& g, const RhodesElement& r) {
  const int nb = r.base_size();
  const int nblocks =
      static_cast<int>(r.blocks().size());
  SPElement out = sp_bottom(g.order() * nb);
  for (int b = 0; b < nb; ++b) {
    const int blk = r.block_of[static_cast<size_t>(b)];
    if (blk < 0) continue;
    for (int w = 0; w < g.order(); ++w)
      out.block_of[static_cast<size_t>(sp_point(
          g.mul(w, r.value[static_cast<size_t>(b)]), b, nb))] =
          w * nblocks + blk;
  }
  sp_normalize(out);
  return out;
}

RhodesElement rh_from_sp(const Group& g, const SPElement& p, int base_size) {
  RhodesElement out = rh_bottom(base_size);
  for (int i = 0; i < p.n_points(); ++i) {
    const int blk = p.block_of[static_cast<size_t>(i)];
    if (blk < 0) continue;
    const int b = sp_point_base(i, base_size);
    if (out.block_of[static_cast<size_t>(b)] >= 0)
      throw ValidationError("rh_from_sp: two labels over base point " +
                            std::to_string(b));
    out.block_of[static_cast<size_t>(b)] = blk;
    out.value[static_cast<size_t>(b)] = sp_point_group(i, base_size);
  }
  rh_normalize(g, out);
  return out;
}

std::string rh_format(const RhodesElement& e, const Group& g,
                      const std::vector<std::string>& b_names) {
  if (e.empty()) return "[]";
  std::ostringstream os;
  os << "[";
  bool first_block = true;
  for (const auto& blk : e.blocks()) {
    if (!first_block) os << " | ";
    first_block = false;
    bool first = true;
    for (int b : blk) {
      if (!first) os << ", ";
      first = false;
      os << b_names[static_cast<size_t>(b)] << ":"
         << g.name(e.value[static_cast<size_t>(b)]);
    }
  }
  os << "]";
  return os.str();
}

}  // namespace smgkit
