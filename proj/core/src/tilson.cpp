#include "smgkit/tilson.hpp"

#include <algorithm>
#include <queue>

#include "smgkit/congruence.hpp"
#include "smgkit/errors.hpp"
#include "smgkit/rees.hpp"

namespace smgkit {

std::vector<int> reachability_congruence(const EnumeratedSemigroup& s,
                                         const std::vector<int>& movers) {
  const Group& g = s.group();
  const int base = s.base_size();
  const int m = g.order() * base;
  std::vector<std::vector<int>> adj(static_cast<size_t>(m));
  for (int gi = 0; gi < g.order(); ++gi)
    for (int b = 0; b < base; ++b)
      for (int z : movers) {
        auto r = rm_act(g, gi, b, s.elem(z));
        if (!r) continue;
        adj[static_cast<size_t>(gi * base + b)].push_back(r->first * base +
                                                          r->second);
      }

  std::vector<std::vector<char>> reach(
      static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));
  for (int p = 0; p < m; ++p) {
    std::queue<int> q;
    q.push(p);
    reach[static_cast<size_t>(p)][static_cast<size_t>(p)] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<size_t>(u)])
        if (!reach[static_cast<size_t>(p)][static_cast<size_t>(v)]) {
          reach[static_cast<size_t>(p)][static_cast<size_t>(v)] = 1;
          q.push(v);
        }
    }
  }

  // Mutual reachability classes. A point with no returning path stays in its
  // own class.
  std::vector<int> part(static_cast<size_t>(m), -1);
  int next = 0;
  for (int p = 0; p < m; ++p) {
    if (part[static_cast<size_t>(p)] >= 0) continue;
    part[static_cast<size_t>(p)] = next;
    for (int q2 = p + 1; q2 < m; ++q2)
      if (reach[static_cast<size_t>(p)][static_cast<size_t>(q2)] &&
          reach[static_cast<size_t>(q2)][static_cast<size_t>(p)])
        part[static_cast<size_t>(q2)] = next;
    ++next;
  }
  return normalize_partition(std::move(part));
}

std::vector<int> tilson_congruence(const EnumeratedSemigroup& s,
                                   const GreenData& gd,
                                   const TypeIICertificate& s2) {
  std::vector<int> full = reachability_congruence(s, s2.members);

  ZeroMinimalIdeal zmi = zero_minimal_ideal(s, gd);
  std::vector<char> ideal(static_cast<size_t>(s.size()), 0);
  for (int x : zmi.nonzero) ideal[static_cast<size_t>(x)] = 1;
  if (s.zero_index() >= 0) ideal[static_cast<size_t>(s.zero_index())] = 1;
  std::vector<int> movers;
  for (int z : s2.members)
    if (ideal[static_cast<size_t>(z)]) movers.push_back(z);
  std::vector<int> restricted = reachability_congruence(s, movers);

  if (full != restricted)
    throw ConsistencyError(
        "reachability congruence differs between all type-II movers and the "
        "ideal-restricted ones");
  return full;
}

}  // namespace smgkit
