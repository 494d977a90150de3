#include "smgkit/green.hpp"

#include <algorithm>
#include <functional>

#include "smgkit/errors.hpp"

namespace smgkit {

namespace {

// Iterative Tarjan. Components are renumbered so that ids follow the order
// of their smallest element, making the result deterministic.
std::vector<int> scc(int n,
                     const std::function<void(int, std::vector<int>&)>& edges) {
  std::vector<int> comp(n, -1), low(n), num(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  int counter = 0, ncomp = 0;

  struct Frame {
    int v;
    std::vector<int> succ;
    size_t next;
  };
  std::vector<Frame> frames;
  std::vector<int> tmp;

  for (int root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    frames.push_back({root, {}, 0});
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    edges(root, frames.back().succ);
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < f.succ.size()) {
        int w = f.succ[f.next++];
        if (num[w] < 0) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, {}, 0});
          edges(w, frames.back().succ);
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        if (low[f.v] == num[f.v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = ncomp;
            if (w == f.v) break;
          }
          ++ncomp;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }

  // Renumber by first occurrence.
  std::vector<int> remap(ncomp, -1);
  int next_id = 0;
  for (int v = 0; v < n; ++v)
    if (remap[comp[v]] < 0) remap[comp[v]] = next_id++;
  for (int v = 0; v < n; ++v) comp[v] = remap[comp[v]];
  return comp;
}

std::vector<std::vector<int>> members_of(const std::vector<int>& class_of) {
  int nc = 0;
  for (int c : class_of) nc = std::max(nc, c + 1);
  std::vector<std::vector<int>> m(nc);
  for (int v = 0; v < static_cast<int>(class_of.size()); ++v)
    m[static_cast<size_t>(class_of[v])].push_back(v);
  return m;
}

}  // namespace

GreenData green_data(const EnumeratedSemigroup& s) {
  GreenData gd;
  gd.n = s.size();

  std::vector<int> gens;
  for (int g = 0; g < s.num_generators(); ++g) gens.push_back(s.generator(g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  gd.r_of = scc(gd.n, [&](int v, std::vector<int>& out) {
    for (int g : gens) out.push_back(s.mul(v, g));
  });
  gd.l_of = scc(gd.n, [&](int v, std::vector<int>& out) {
    for (int g : gens) out.push_back(s.mul(g, v));
  });
  gd.j_of = scc(gd.n, [&](int v, std::vector<int>& out) {
    for (int g : gens) {
      out.push_back(s.mul(v, g));
      out.push_back(s.mul(g, v));
    }
  });
  gd.r_members = members_of(gd.r_of);
  gd.l_members = members_of(gd.l_of);
  gd.j_members = members_of(gd.j_of);

  // H = R meet L.
  gd.h_of.assign(static_cast<size_t>(gd.n), -1);
  {
    std::vector<std::vector<int>> seen(
        static_cast<size_t>(gd.r_members.size()));
    int next_h = 0;
    for (int v = 0; v < gd.n; ++v) {
      auto& row = seen[static_cast<size_t>(gd.r_of[v])];
      int l = gd.l_of[v];
      if (static_cast<int>(row.size()) <= l) row.resize(l + 1, -1);
      if (row[static_cast<size_t>(l)] < 0) row[static_cast<size_t>(l)] = next_h++;
      gd.h_of[static_cast<size_t>(v)] = row[static_cast<size_t>(l)];
    }
  }
  gd.h_members = members_of(gd.h_of);
  gd.h_size.resize(gd.h_members.size());
  for (size_t h = 0; h < gd.h_members.size(); ++h)
    gd.h_size[h] = static_cast<int>(gd.h_members[h].size());

  for (int i = 0; i < gd.n; ++i)
    if (s.is_idempotent(i)) gd.idempotents.push_back(i);

  gd.h_is_group.assign(gd.h_members.size(), 0);
  gd.j_regular.assign(gd.j_members.size(), 0);
  for (int e : gd.idempotents) {
    gd.h_is_group[static_cast<size_t>(gd.h_of[e])] = 1;
    gd.j_regular[static_cast<size_t>(gd.j_of[e])] = 1;
  }

  // Reachability over the condensation of the two-sided graph.
  int nj = gd.num_j();
  std::vector<std::vector<int>> dag(static_cast<size_t>(nj));
  for (int v = 0; v < gd.n; ++v)
    for (int g : gens)
      for (int w : {s.mul(v, g), s.mul(g, v)})
        if (gd.j_of[w] != gd.j_of[v])
          dag[static_cast<size_t>(gd.j_of[v])].push_back(gd.j_of[w]);
  for (auto& row : dag) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  gd.j_leq.assign(static_cast<size_t>(nj),
                  std::vector<char>(static_cast<size_t>(nj), 0));
  for (int src = 0; src < nj; ++src) {
    std::vector<int> todo = {src};
    auto& below = gd.j_leq;
    std::vector<char> seen(static_cast<size_t>(nj), 0);
    seen[static_cast<size_t>(src)] = 1;
    while (!todo.empty()) {
      int c = todo.back();
      todo.pop_back();
      below[static_cast<size_t>(c)][static_cast<size_t>(src)] = 1;
      for (int d : dag[static_cast<size_t>(c)])
        if (!seen[static_cast<size_t>(d)]) {
          seen[static_cast<size_t>(d)] = 1;
          todo.push_back(d);
        }
    }
  }

  // Within a J-class all H-classes have one size.
  for (int j = 0; j < nj; ++j) {
    int sz = -1;
    for (int v : gd.j_members[static_cast<size_t>(j)]) {
      int hs = gd.h_size[static_cast<size_t>(gd.h_of[v])];
      if (sz < 0) sz = hs;
      if (sz != hs)
        throw ConsistencyError(
            "H-classes of unequal size inside one J-class (class " +
            std::to_string(j) + ")");
    }
  }
  return gd;
}

int GreenData::schutzenberger_order(int j) const {
  return h_size[static_cast<size_t>(h_of[static_cast<size_t>(
      j_members[static_cast<size_t>(j)][0])])];
}

MaximalSubgroup maximal_subgroup(const EnumeratedSemigroup& s,
                                 const GreenData& gd, int h_class) {
  if (!gd.h_is_group[static_cast<size_t>(h_class)])
    throw ValidationError("maximal_subgroup: H-class " +
                          std::to_string(h_class) +
                          " contains no idempotent");
  std::vector<int> elems = gd.h_members[static_cast<size_t>(h_class)];
  int e = -1;
  for (int x : elems)
    if (s.is_idempotent(x)) {
      e = x;
      break;
    }
  auto eit = std::find(elems.begin(), elems.end(), e);
  std::rotate(elems.begin(), eit, eit + 1);

  int n = static_cast<int>(elems.size());
  std::vector<int> pos(static_cast<size_t>(s.size()), -1);
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(elems[i])] = i;
  std::vector<std::vector<int>> table(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n)));
  std::vector<std::string> names(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    names[static_cast<size_t>(i)] = "x" + std::to_string(elems[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = pos[static_cast<size_t>(s.mul(elems[i], elems[j]))];
      if (p < 0)
        throw ConsistencyError(
            "maximal_subgroup: product escapes the H-class at (" +
            std::to_string(elems[i]) + "," + std::to_string(elems[j]) + ")");
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = p;
    }
  return {Group::from_table(std::move(names), std::move(table)),
          std::move(elems)};
}

bool is_aperiodic(const GreenData& gd) {
  for (int h = 0; h < gd.num_h(); ++h)
    if (gd.h_size[static_cast<size_t>(h)] != 1) return false;
  return true;
}

}  // namespace smgkit
