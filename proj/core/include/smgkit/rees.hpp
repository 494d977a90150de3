#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smgkit/enumerate.hpp"
#include "smgkit/green.hpp"
#include "smgkit/group.hpp"
#include "smgkit/row_monomial.hpp"

namespace smgkit {

// Regular Rees matrix semigroup with zero over a group: nonzero elements
// are triples (a, g, b), and (a,g,b)(a',g',b') = (a, g C(b,a') g', b') when
// C(b,a') != 0, else zero. The matrix is stored transposed: c_t[a][b] is
// C(b,a), with -1 for a zero entry.
struct ReesStructure {
  Group group;
  std::vector<std::string> a_names;
  std::vector<std::string> b_names;
  std::vector<std::vector<int>> c_t;

  int num_a() const { return static_cast<int>(a_names.size()); }
  int num_b() const { return static_cast<int>(b_names.size()); }
  int c(int b, int a) const {
    return c_t[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }

  // Shape and range checks plus regularity (every row and column of C has
  // a nonzero entry). Throws ValidationError with a witness.
  void validate() const;
};

struct ReesTriple {
  int a, g, b;
  bool operator==(const ReesTriple&) const = default;
};

// The row function of the triple on B: i |-> (C(i,a) g) . b where defined.
RowMonomialElement rees_triple_element(const ReesStructure& rs, ReesTriple t);

// Abstract product; nullopt encodes the zero element.
std::optional<ReesTriple> rees_product(const ReesStructure& rs, ReesTriple x,
                                       ReesTriple y);

// Inverts rees_triple_element. nullopt when the function is zero or does
// not arise from any triple. When two triples give one function (the
// structure is not left/right faithful) the smallest a wins.
std::optional<ReesTriple> rees_decode(const ReesStructure& rs,
                                      const RowMonomialElement& e);

// The unique 0-minimal ideal, when it exists: a J-class whose only strictly
// smaller class is {0}. Throws ValidationError when the semigroup has no
// zero or the minimal nonzero class is not unique.
struct ZeroMinimalIdeal {
  int j_class = -1;
  std::vector<int> nonzero;  // element indices, increasing
  bool zero_simple = false;  // the ideal squared is nonzero
};

ZeroMinimalIdeal zero_minimal_ideal(const EnumeratedSemigroup& s,
                                    const GreenData& gd);

// Checks the group-mapping conditions for a monoid with zero: unique
// 0-simple 0-minimal ideal, faithful action on it from both sides, and a
// nontrivial maximal subgroup. `failure` carries a witness for the first
// condition that breaks.
struct GMCertificate {
  bool has_zero_minimal_ideal = false;
  bool ideal_zero_simple = false;
  bool right_faithful = false;
  bool left_faithful = false;
  bool group_nontrivial = false;
  int maximal_subgroup_order = 0;
  std::vector<int> ideal_nonzero;
  std::string failure;

  // Generalized group mapping: everything except group nontriviality.
  bool is_ggm() const {
    return has_zero_minimal_ideal && ideal_zero_simple && right_faithful &&
           left_faithful;
  }
  bool is_gm() const { return is_ggm() && group_nontrivial; }
};

GMCertificate gm_certificate(const EnumeratedSemigroup& s,
                             const GreenData& gd);

// Rees coordinates on the 0-minimal ideal. Rows (the A side) are the
// R-classes of the nonzero part, columns (B side) its L-classes, both
// ordered by smallest member. The base idempotent e is the first
// idempotent of the ideal; q[a] is the first member of R_a meet L_e and
// r[b] the first member of R_e meet L_b; C(b,a) realizes r[b] q[a].
struct Coordinatization {
  ReesStructure rees;
  int e = -1;                    // base idempotent, semigroup index
  MaximalSubgroup h;             // group of H_e; h.elements[g] realizes g
  std::vector<int> q;            // per A-index
  std::vector<int> r;            // per B-index
  std::vector<int> elem_of_triple;   // [a * numB * |G| + g * numB + b]
  std::vector<ReesTriple> triple_of; // indexed like zmi.nonzero
};

Coordinatization coordinatize(const EnumeratedSemigroup& s,
                              const GreenData& gd,
                              const ZeroMinimalIdeal& zmi);

// Rescales rows so every nonzero entry of column a0 becomes the identity:
// C(b, a) is replaced by p_b C(b, a) with p_b = C(b, a0)^{-1} where that
// entry is nonzero and p_b = 1 where it is zero. Triples map along
// (a, g, b) |-> (a, g p_b^{-1}, b).
struct NormalizedRees {
  ReesStructure rees;
  std::vector<int> p;  // per b, the scaling applied to row b
};

NormalizedRees normalize_rees(const ReesStructure& rs, int a0);

// Exhaustive isomorphism test for small structures: searches a group
// isomorphism together with row/column permutations and scalings carrying
// one matrix to the other.
bool rees_isomorphic(const ReesStructure& x, const ReesStructure& y);

}  // namespace smgkit
