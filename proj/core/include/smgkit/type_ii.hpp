#pragma once

#include <cstdint>
#include <vector>

#include "smgkit/enumerate.hpp"

namespace smgkit {

// How an element entered the type-II subsemigroup: as an idempotent seed,
// as a product of two members, or by weak conjugation (x z y or y z x for a
// pair with xyx = x and a member z).
struct TypeIIEntry {
  enum class Tag { kIdempotent, kProduct, kWeakConjugate };
  Tag tag = Tag::kIdempotent;
  int element = -1;
  int left = -1, right = -1;  // product factors, or the (x, y) pair
  int via = -1;               // the member z for weak conjugation
};

struct TypeIICertificate {
  std::vector<int> members;       // sorted
  std::vector<char> is_member;    // size |S|
  std::vector<TypeIIEntry> log;   // one entry per member, discovery order
};

// Least subsemigroup containing all idempotents and closed under weak
// conjugation: alternating product and conjugation sweeps to a fixed
// point. A nonzero seed permutes the sweep order; the result is the same
// for every seed (property-tested), only the log changes.
TypeIICertificate type_ii(const EnumeratedSemigroup& s,
                          std::uint64_t shuffle_seed = 0);

// Product closure of the idempotents, re-enumerated as its own semigroup.
// Generator i of the result is the i-th idempotent of s.
EnumeratedSemigroup idempotent_generated(const EnumeratedSemigroup& s);

}  // namespace smgkit
