#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smgkit/group.hpp"
#include "smgkit/row_monomial.hpp"

namespace smgkit {

// Labeled points (g, b) of G x B are packed as g * |B| + b, matching the
// convention used by the Tilson congruence code.
inline int sp_point(int g, int b, int base_size) { return g * base_size + b; }
inline int sp_point_group(int p, int base_size) { return p / base_size; }
inline int sp_point_base(int p, int base_size) { return p % base_size; }

// An element (Y, Pi) of the set-partition lattice over a fixed point set
// {0, ..., n_points-1}: a subset Y together with a partition of Y.
// block_of[p] == -1 iff p is outside Y; block ids are normalized to
// first-occurrence order, so operator== is structural equality.
struct SPElement {
  std::vector<int> block_of;

  int n_points() const { return static_cast<int>(block_of.size()); }
  bool contains(int p) const { return block_of[static_cast<size_t>(p)] >= 0; }
  bool empty() const;
  int support_size() const;
  int block_count() const;
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const SPElement& o) const { return block_of == o.block_of; }
  bool operator!=(const SPElement& o) const { return !(*this == o); }
  bool operator<(const SPElement& o) const { return block_of < o.block_of; }
};

struct SPElementHash {
  std::size_t operator()(const SPElement& e) const;
};

// Renumbers blocks in first-occurrence order; every constructor below
// already returns normalized elements.
void sp_normalize(SPElement& e);

SPElement sp_bottom(int n_points);
SPElement sp_top(int n_points);

// The element ({p}, {{p}}).
SPElement sp_singleton(int n_points, int p);

// Builds from explicit blocks; throws ValidationError if they overlap.
SPElement sp_from_blocks(int n_points, const std::vector<std::vector<int>>& blocks);

// p <= q iff Y_p is contained in Y_q and every p-block lies inside one
// q-block (supports shrink and partitions refine downward).
bool sp_leq(const SPElement& p, const SPElement& q);

// Greatest lower bound: intersection of supports with the common
// refinement of the two restricted partitions.
SPElement sp_meet(const SPElement& p, const SPElement& q);

// Least upper bound: union of supports, transitive closure of the
// two block structures.
SPElement sp_join(const SPElement& p, const SPElement& q);

// At most one group label over each base point. The base size is
// |Y| / |G| in the packed-point convention.
bool is_cross_section(const SPElement& p, int base_size);

// Every block individually a cross section. A block holding two labels
// over one base point asserts two group values at once: such an element
// collapses to the contradiction of the Rhodes lattice.
bool sp_blocks_consistent(const SPElement& p, int base_size);

// Every element of SP over n_points, in a fixed deterministic order
// (support mask ascending, then restricted-growth partition strings).
// Size is the (n_points + 1)-st Bell number; cap guards the blowup.
std::vector<SPElement> enumerate_sp(int n_points, std::size_t cap);

std::string sp_format(const SPElement& e, const Group& g, int base_size,
                      const std::vector<std::string>& b_names);

// An element (X, Pi, [f]) of the Rhodes lattice over B: a subset X of B,
// a partition Pi of X, and a G-valued function on X taken up to
// independent left translation on each block. Stored in canonical form:
// the smallest base point of each block carries the identity label.
struct RhodesElement {
  std::vector<int> block_of;  // size |B|, -1 outside X
  std::vector<int> value;     // group indices, meaningful only on X

  int base_size() const { return static_cast<int>(block_of.size()); }
  bool contains(int b) const { return block_of[static_cast<size_t>(b)] >= 0; }
  bool empty() const;
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const RhodesElement& o) const {
    return block_of == o.block_of && value == o.value;
  }
  bool operator!=(const RhodesElement& o) const { return !(*this == o); }
};

// Renumbers blocks and rescales each block so its minimal point has
// value 1; values outside X are forced to -1.
void rh_normalize(const Group& g, RhodesElement& e);

RhodesElement rh_bottom(int base_size);

// Builds from blocks plus values; normalizes. Throws ValidationError on
// overlapping blocks or value/block mismatch.
RhodesElement rh_from_blocks(const Group& g, int base_size,
                             const std::vector<std::vector<int>>& blocks,
                             const std::vector<std::vector<int>>& values);

// Graph of the canonical representative: Y = {(f(b), b) | b in X} with
// blocks lifted pointwise. Re-reading the fibers off the result recovers
// the canonical form, which round-trips rh_embed.
SPElement rh_embed(const Group& g, const RhodesElement& r);

// G-saturated avatar: Y = G x X, and each (block P, scalar w) pair of the
// class becomes the block {(w f(b), b) | b in P}. Encodes the class
// faithfully as a G-invariant SP element whose blocks are cross-sections.
SPElement rh_saturate(const Group& g, const RhodesElement& r);

// Inverse of rh_embed on cross-section-per-block SP elements: reads one
// value per point and normalizes. Throws ValidationError if some block
// carries two labels over one base point.
RhodesElement rh_from_sp(const Group& g, const SPElement& p, int base_size);

std::string rh_format(const RhodesElement& e, const Group& g,
                      const std::vector<std::string>& b_names);

}  // namespace smgkit
