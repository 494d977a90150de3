#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "smgkit/group.hpp"
#include "smgkit/row_monomial.hpp"
#include "smgkit/sp_lattice.hpp"

namespace smgkit {

// Boolean relation on {0..n-1}, one bitset row per element. Relations
// compose left to right: (i,k) in a*b iff some j has (i,j) in a and
// (j,k) in b.
struct BoolRelation {
  int n = 0, w = 0;
  std::vector<uint64_t> bits;

  BoolRelation() = default;
  explicit BoolRelation(int n_);
  static BoolRelation identity(int n);
  static BoolRelation diagonal(const std::vector<char>& dom);

  bool get(int i, int j) const {
    return (bits[static_cast<size_t>(i) * static_cast<size_t>(w) +
                 static_cast<size_t>(j >> 6)] >>
            (j & 63)) &
           1u;
  }
  void set(int i, int j) {
    bits[static_cast<size_t>(i) * static_cast<size_t>(w) +
         static_cast<size_t>(j >> 6)] |= uint64_t{1} << (j & 63);
  }

  BoolRelation product(const BoolRelation& o) const;
  bool operator==(const BoolRelation& o) const { return n == o.n && bits == o.bits; }
  bool operator!=(const BoolRelation& o) const { return !(*this == o); }

  bool is_diagonal() const;
  std::vector<char> domain() const;  // rows with at least one pair
  std::size_t pair_count() const;
  std::size_t hash() const;
};

struct BoolRelationHash {
  std::size_t operator()(const BoolRelation& r) const { return r.hash(); }
};

// Materialized lattice of subsets-with-partitions over base_size * |G|
// points, with meet and order tables when small enough to afford them.
struct LatticeHandle {
  Group group;
  int base = 0;      // |B|
  int n_points = 0;  // |G| * base
  std::vector<SPElement> elems;
  std::unordered_map<SPElement, int, SPElementHash> index_of;
  bool tabled = false;
  std::vector<int> meet_tab;  // n*n when tabled

  static LatticeHandle build(const Group& g, int base_size,
                             std::size_t cap = 25000);

  int size() const { return static_cast<int>(elems.size()); }
  int index(const SPElement& e) const;  // ConsistencyError if absent
  int meet(int a, int b) const;
  bool leq(int a, int b) const;
  int top() const;
  int bottom() const;
  int point(int pt) const;  // singleton {pt}
};

// Stability of the one-step transition from value Y to value Z under a
// letter: images of covered points stay inside Z and merging before the
// letter coincides with merging after. Returns "" when stable, otherwise
// a short witness.
std::string sp_transition_witness(const Group& g, const RowMonomialElement& act,
                                  const SPElement& Y, const SPElement& Z);

// Free flow of a letter: all stable transitions, as a relation on L.
BoolRelation free_flow(const LatticeHandle& lat, const RowMonomialElement& act);

// A relation encodes a closure operator exactly when its pair set contains
// (top, top) and is closed under componentwise meet.
struct ClosureCheck {
  bool ok = false;
  std::string witness;
};
ClosureCheck closure_check(const LatticeHandle& lat, const BoolRelation& r);

// back flow: the diagonal on the set of left coordinates
BoolRelation back_flow(const BoolRelation& f);

// diagonal on the self-stable elements {l : (l,l) in f}
BoolRelation kleene_part(const BoolRelation& f);

// idempotent power f^k = f^{2k}; iteration capped
BoolRelation omega_power(const BoolRelation& f, std::size_t iter_cap = 20000);

// loop: omega power followed by the Kleene diagonal
BoolRelation loop_power(const BoolRelation& f, std::size_t iter_cap = 20000);

// Forward action table of a closure relation: fwd[l] is the index of the
// right coordinate of the least stable pair whose left coordinate lies
// above l, or -1 when no stable pair sits above l.
std::vector<int> forward_table(const LatticeHandle& lat, const BoolRelation& f);

// Pointwise forward image under a free flow, without materializing the
// relation: blocks colliding under the letter are merged first (the least
// domain element above l) and the image carries the induced partition.
// Always defined, and agrees with forward_table of free_flow.
SPElement free_flow_forward(const Group& g, const RowMonomialElement& act,
                            const SPElement& l);

// Least element above l that is self-stable for the letter's free flow:
// the support closes under the letter's total part and the partition
// grows until the letter maps blocks into blocks injectively. Exists
// whenever iterating stays inside the finite lattice; used for the
// pointwise loop of the clock letter.
SPElement least_letter_stable(const Group& g, const RowMonomialElement& act,
                              const SPElement& l);

}  // namespace smgkit
