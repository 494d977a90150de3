#include "smgkit/congruence.hpp"

#include <numeric>

#include "smgkit/errors.hpp"

namespace smgkit {

std::vector<int> normalize_partition(std::vector<int> p) {
  std::vector<int> remap(p.size(), -1);
  int next = 0;
  for (int& c : p) {
    if (c < 0 || c >= static_cast<int>(p.size()))
      throw ValidationError("partition: class id out of range");
    if (remap[static_cast<size_t>(c)] < 0) remap[static_cast<size_t>(c)] = next++;
    c = remap[static_cast<size_t>(c)];
  }
  return p;
}

bool partition_refines(const std::vector<int>& fine,
                       const std::vector<int>& coarse) {
  // fine-class -> coarse-class must be a function.
  std::vector<int> image(fine.size(), -1);
  for (size_t v = 0; v < fine.size(); ++v) {
    int f = fine[v];
    if (image[static_cast<size_t>(f)] < 0)
      image[static_cast<size_t>(f)] = coarse[v];
    else if (image[static_cast<size_t>(f)] != coarse[v])
      return false;
  }
  return true;
}

std::vector<std::vector<int>> all_partitions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(static_cast<size_t>(m), 0);
  while (true) {
    out.push_back(rgs);
    int i = m - 1;
    while (i > 0) {
      int maxprefix = 0;
      for (int j = 0; j < i; ++j) maxprefix = std::max(maxprefix, rgs[static_cast<size_t>(j)]);
      if (rgs[static_cast<size_t>(i)] <= maxprefix) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[static_cast<size_t>(i)];
    for (int j = i + 1; j < m; ++j) rgs[static_cast<size_t>(j)] = 0;
  }
  return out;
}

bool is_compatible_partition(const std::vector<int>& part,
                             const std::vector<std::vector<int>>& maps) {
  int m = static_cast<int>(part.size());
  for (const auto& f : maps) {
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) {
        bool pd = f[static_cast<size_t>(p)] >= 0, qd = f[static_cast<size_t>(q)] >= 0;
        if (part[static_cast<size_t>(p)] == part[static_cast<size_t>(q)] && pd && qd &&
            part[static_cast<size_t>(f[static_cast<size_t>(p)])] !=
                part[static_cast<size_t>(f[static_cast<size_t>(q)])])
          return false;
        if (pd && qd &&
            part[static_cast<size_t>(f[static_cast<size_t>(p)])] ==
                part[static_cast<size_t>(f[static_cast<size_t>(q)])] &&
            part[static_cast<size_t>(p)] != part[static_cast<size_t>(q)])
          return false;
      }
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(static_cast<size_t>(n)) {
    std::iota(up.begin(), up.end(), 0);
  }
  int find(int x) {
    while (up[static_cast<size_t>(x)] != x) {
      up[static_cast<size_t>(x)] = up[static_cast<size_t>(up[static_cast<size_t>(x)])];
      x = up[static_cast<size_t>(x)];
    }
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    up[static_cast<size_t>(b)] = a;
    return true;
  }
};

}  // namespace

std::vector<int> minimal_injective_congruence(
    int m, const std::vector<std::vector<int>>& maps) {
  for (const auto& f : maps) {
    if (static_cast<int>(f.size()) != m)
      throw ValidationError("minimal_injective_congruence: map arity " +
                            std::to_string(f.size()) + ", expected " +
                            std::to_string(m));
    for (int v : f)
      if (v < -1 || v >= m)
        throw ValidationError(
            "minimal_injective_congruence: map value out of range");
  }
  UnionFind uf(m);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& f : maps)
      for (int p = 0; p < m; ++p) {
        if (f[static_cast<size_t>(p)] < 0) continue;
        for (int q = p + 1; q < m; ++q) {
          if (f[static_cast<size_t>(q)] < 0) continue;
          if (uf.find(p) == uf.find(q))
            changed |= uf.merge(f[static_cast<size_t>(p)], f[static_cast<size_t>(q)]);
          if (uf.find(f[static_cast<size_t>(p)]) == uf.find(f[static_cast<size_t>(q)]))
            changed |= uf.merge(p, q);
        }
      }
  }
  std::vector<int> part(static_cast<size_t>(m));
  for (int v = 0; v < m; ++v) part[static_cast<size_t>(v)] = uf.find(v);
  return normalize_partition(std::move(part));
}

}  // namespace smgkit
