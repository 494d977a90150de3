#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smgkit/enumerate.hpp"
#include "smgkit/rees.hpp"

namespace smgkit {

// Generators of the clock extension of a transformation semigroup (G x B, S):
// the base grows to B x {0..n} (n = |B|), t advances the clock coordinate,
// and each element x of S is frozen into a one-shot map h_x reading x off
// the diagonal and writing its values at clock 0.
//
// Points are ordered block-major: block k holds the pairs (i, i+k mod n+1),
// ascending i, so the diagonal block {(i,i)} comes first and t shifts whole
// blocks. Internally i is 0-based; names render the 1-based convention
// "(i,j)".
struct EvGenerators {
  Group group;
  int n = 0;        // source base size
  int ev_base = 0;  // n (n+1)
  std::vector<std::string> b_ev_names;
  RowMonomialElement t;
  std::vector<RowMonomialElement> h;  // per source element index
  std::vector<int> h_of;              // source indices h was built for

  int ev_index(int bi, int j) const {
    int k = (j - bi - 1 + (n + 1)) % (n + 1);
    return k * n + bi;
  }
  std::pair<int, int> ev_point(int idx) const {
    int k = idx / n, bi = idx % n;
    return {bi, (bi + 1 + k) % (n + 1)};
  }
  int block_of(int idx) const { return idx / n; }
};

// rs must have row 0 of the distinguished column a0 equal to the identity
// and every other entry of that column 0 or the identity (see
// normalize_rees); throws ValidationError otherwise. h is built for every
// element of s unless a nonempty restriction is given.
EvGenerators build_ev_generators(const EnumeratedSemigroup& s,
                                 const ReesStructure& rs, int a0,
                                 const std::vector<int>& restrict_to = {});

EnumeratedSemigroup build_sev(const EvGenerators& ev,
                              std::size_t cap = EnumeratedSemigroup::kDefaultCap);

// Canonical kernel data of a row function whose edges all share one
// destination: val[p] is v_p0 * v_p^{-1} over the domain (v = edge labels,
// p0 = first defined position), so the first defined position carries the
// identity and the vector is invariant under left translation of fibers.
// val[p] == -1 marks positions outside the domain.
std::vector<int> canonical_kernel(const Group& g, const RowMonomialElement& e);

// The checks promised for the construction, each independent; `failure`
// describes the first failing one.
struct EvPropertyReport {
  bool units_cyclic = false;       // U(S^Ev) = <t> iso Z_{n+1}
  bool orbit_structure = false;    // orbits of <t> are the rows {i} x {0..n}
  bool h_per_orbit = false;        // h_x hits each orbit at most once, at (i,i)
  bool dom_im_disjoint = false;    // Dom(h_x) and Im(h_x) never meet
  bool dom_b0_im_r0 = false;       // Dom(h_x) in block 0, Im(h_x) at clock 0
  bool block_shift = false;        // t shifts both block systems by one
  bool transitive = false;         // S^Ev transitive on G x B^Ev
  bool nonunit_ideal_squared = false;  // (S^Ev - U)^2 = I(S^Ev)
  bool max_subgroup_is_g = false;  // g -> h_{(a0,g,1)} t embeds G as H(e)
  std::string failure;

  bool all() const {
    return units_cyclic && orbit_structure && h_per_orbit &&
           dom_im_disjoint && dom_b0_im_r0 && block_shift && transitive &&
           nonunit_ideal_squared && max_subgroup_is_g;
  }
};

EvPropertyReport verify_ev_properties(const EnumeratedSemigroup& s,
                                      const ReesStructure& rs, int a0,
                                      const EvGenerators& ev,
                                      const EnumeratedSemigroup& sev);

// R-class index data of I(S^Ev): each class is determined by its kernel,
// a block index plus relative labels over the source base.
struct EvCrossSection {
  int block = 0;
  std::vector<int> val;  // size n, indexed by source b; -1 off the domain
  enum class Origin { kIdealColumn, kComposite } origin = Origin::kComposite;

  bool same_class(const EvCrossSection& o) const {
    return block == o.block && val == o.val;
  }
};

struct EvCrossSections {
  std::vector<EvCrossSection> a0;   // block-0 classes, sorted
  std::vector<EvCrossSection> all;  // block-major, (n+1) copies of a0 shifted
  int per_block = 0;
};

// Enumerates the classes from the elements of s directly, then cross-checks
// them against the R-classes of the enumerated ideal; ConsistencyError on
// any mismatch.
EvCrossSections ev_cross_sections(const EnumeratedSemigroup& s,
                                  const EnumeratedSemigroup& sev,
                                  const EvGenerators& ev);

// Structure matrix of I(S^Ev) over explicit representatives: rows of c0 are
// classes over the diagonal block, columns the source base; c_ev is its
// (n+1)-fold block-diagonal spread over all of B^Ev. Every entry is
// verified against an actual product of representatives, and the nonzero
// pattern against the idempotent pattern of the ideal; ConsistencyError on
// disagreement.
struct EvStructureMatrix {
  ReesStructure c0;
  ReesStructure c_ev;
  int e0 = -1;                 // base idempotent of I(S^Ev)
  std::vector<int> l_rep;      // per B^Ev index: element with that image point
  std::vector<int> r_rep;      // per A^Ev index: canonical kernel representative
  std::vector<int> col_class;  // per source column: its class in a0
  std::vector<int> col_scale;  // per source column: right scaling off c0
};

EvStructureMatrix ev_structure_matrix(const EnumeratedSemigroup& s,
                                      const ReesStructure& rs, int a0,
                                      const EvGenerators& ev,
                                      const EnumeratedSemigroup& sev,
                                      const EvCrossSections& cs);

}  // namespace smgkit
