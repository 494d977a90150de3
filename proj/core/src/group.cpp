#include "smgkit/group.hpp"

#include <algorithm>
#include <map>

#include "smgkit/errors.hpp"

namespace smgkit {

Group Group::from_table(std::vector<std::string> names,
                        std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw ValidationError("group: empty element list");
  if (static_cast<int>(table.size()) != n)
    throw ValidationError("group: table has " + std::to_string(table.size()) +
                          " rows, expected " + std::to_string(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw ValidationError("group: row " + std::to_string(i) + " has " +
                            std::to_string(table[i].size()) + " entries");
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw ValidationError("group: entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range");
  }
  for (int i = 0; i < n; ++i) {
    if (table[0][i] != i)
      throw ValidationError("group: element 0 is not a left identity at " +
                            names[i]);
    if (table[i][0] != i)
      throw ValidationError("group: element 0 is not a right identity at " +
                            names[i]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError("group: associativity fails at (" + names[a] +
                                "," + names[b] + "," + names[c] + ")");

  Group g;
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0)
      throw ValidationError("group: no inverse for " + names[a]);
  }
  std::map<std::string, int> seen;
  for (int i = 0; i < n; ++i)
    if (!seen.emplace(names[i], i).second)
      throw ValidationError("group: duplicate element name " + names[i]);
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  return g;
}

Group Group::cyclic(int n) {
  if (n <= 0) throw ValidationError("group: cyclic order must be positive");
  std::vector<std::string> names(n);
  names[0] = "1";
  if (n == 2) {
    names[1] = "-1";
  } else {
    for (int i = 1; i < n; ++i)
      names[i] = (i == 1) ? "g" : ("g^" + std::to_string(i));
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return from_table(std::move(names), std::move(table));
}

Group::Elem Group::index_of(const std::string& name) const {
  int i = find_name(name);
  if (i < 0) throw ValidationError("group: unknown element name " + name);
  return i;
}

int Group::find_name(const std::string& name) const {
  for (int i = 0; i < order(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

int Group::element_order(Elem a) const {
  int k = 1;
  Elem x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

namespace {

// Extends the partial map f (g -> h) to the subgroup generated by the
// already-mapped elements; returns false on any clash.
bool extend_homomorphism(const Group& g, const Group& h, std::vector<int>& f) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < g.order(); ++a) {
      if (f[a] < 0) continue;
      for (int b = 0; b < g.order(); ++b) {
        if (f[b] < 0) continue;
        int ab = g.mul(a, b);
        int fab = h.mul(f[a], f[b]);
        if (f[ab] < 0) {
          f[ab] = fab;
          changed = true;
        } else if (f[ab] != fab) {
          return false;
        }
      }
    }
  }
  return true;
}

bool search_iso(const Group& g, const Group& h, std::vector<int> f) {
  if (!extend_homomorphism(g, h, f)) return false;
  int next = -1;
  for (int a = 0; a < g.order(); ++a)
    if (f[a] < 0) {
      next = a;
      break;
    }
  if (next < 0) {
    std::vector<bool> hit(h.order(), false);
    for (int a = 0; a < g.order(); ++a) {
      if (hit[f[a]]) return false;
      hit[f[a]] = true;
    }
    return true;
  }
  for (int img = 0; img < h.order(); ++img) {
    if (h.element_order(img) != g.element_order(next)) continue;
    std::vector<int> f2 = f;
    f2[next] = img;
    if (search_iso(g, h, std::move(f2))) return true;
  }
  return false;
}

}  // namespace

bool groups_isomorphic(const Group& g, const Group& h) {
  if (g.order() != h.order()) return false;
  std::vector<int> f(g.order(), -1);
  f[g.identity()] = h.identity();
  return search_iso(g, h, std::move(f));
}

}  // namespace smgkit
