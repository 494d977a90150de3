#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smgkit/group.hpp"

namespace smgkit {

// Partial transformation of a base set B with group labels: for b in the
// domain, b |-> label[b] * dest[b]. dest[b] == -1 marks "undefined".
// The everywhere-undefined element is the zero of the semigroup.
struct RowMonomialElement {
  std::vector<int> dest;   // size |B|, entries in [-1, |B|)
  std::vector<int> label;  // size |B|, group indices; ignored where dest == -1

  int base_size() const { return static_cast<int>(dest.size()); }
  bool defined_at(int b) const { return dest[static_cast<size_t>(b)] >= 0; }
  bool is_zero() const;
  int domain_size() const;

  bool operator==(const RowMonomialElement& o) const {
    if (dest != o.dest) return false;
    for (size_t b = 0; b < dest.size(); ++b)
      if (dest[b] >= 0 && label[b] != o.label[b]) return false;
    return true;
  }
  bool operator<(const RowMonomialElement& o) const {
    if (dest != o.dest) return dest < o.dest;
    for (size_t b = 0; b < dest.size(); ++b) {
      if (dest[b] < 0) continue;
      if (label[b] != o.label[b]) return label[b] < o.label[b];
    }
    return false;
  }
};

struct RowMonomialHash {
  std::size_t operator()(const RowMonomialElement& e) const;
};

RowMonomialElement rm_identity(const Group& g, int base_size);
RowMonomialElement rm_zero(int base_size);

// Apply s first, then t (right action on the base set): b(st) = (bs)t.
RowMonomialElement rm_compose(const Group& g, const RowMonomialElement& s,
                              const RowMonomialElement& t);

// Right action of s on the labeled point (h, b); nullopt when bs is
// undefined (the point is sent to zero).
std::optional<std::pair<int, int>> rm_act(const Group& g, int h, int b,
                                          const RowMonomialElement& s);

// Renders edges as "b -> g.b'" joined by ", "; zero renders as "0".
std::string rm_format(const RowMonomialElement& e, const Group& g,
                      const std::vector<std::string>& b_names);

}  // namespace smgkit
