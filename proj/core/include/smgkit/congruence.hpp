#pragma once

#include <vector>

namespace smgkit {

// Partitions of {0..m-1} are stored as class-id vectors normalized to
// first-occurrence order: p[0] == 0 and each new id is one larger than the
// largest id seen so far.
std::vector<int> normalize_partition(std::vector<int> p);

// Every class of `fine` lies inside a class of `coarse`.
bool partition_refines(const std::vector<int>& fine,
                       const std::vector<int>& coarse);

// All partitions of an m-point set in restricted-growth-string order.
// Only meant for small m (Bell numbers grow fast).
std::vector<std::vector<int>> all_partitions(int m);

// The maps are partial transformations of {0..m-1} with -1 for undefined.
// A partition P is compatible when for every map f:
//   p ~ q with f(p), f(q) both defined  =>  f(p) ~ f(q)   (congruence)
//   f(p) ~ f(q) with both defined       =>  p ~ q         (injectivity)
bool is_compatible_partition(const std::vector<int>& part,
                             const std::vector<std::vector<int>>& maps);

// The finest partition compatible with all maps: least fixpoint of the two
// merge rules above, computed with a union-find worklist. Every compatible
// partition is coarser than the result.
std::vector<int> minimal_injective_congruence(
    int m, const std::vector<std::vector<int>>& maps);

}  // namespace smgkit
