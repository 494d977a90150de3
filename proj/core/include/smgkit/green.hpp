#pragma once

#include <vector>

#include "smgkit/enumerate.hpp"
#include "smgkit/group.hpp"

namespace smgkit {

// Green's relations of a finite semigroup, computed as strongly connected
// components of the one-sided Cayley graphs (J via the two-sided graph;
// J = D in the finite case).
struct GreenData {
  int n = 0;

  std::vector<int> r_of, l_of, j_of, h_of;  // class id per element
  std::vector<std::vector<int>> r_members, l_members, j_members, h_members;

  // j_leq[a][b]: class a lies below or equals class b in the J-order
  // (every element of a is a two-sided multiple of elements of b).
  std::vector<std::vector<char>> j_leq;

  std::vector<char> j_regular;   // per J-class: contains an idempotent
  std::vector<char> h_is_group;  // per H-class: contains an idempotent
  std::vector<int> h_size;       // per H-class
  std::vector<int> idempotents;  // element indices, increasing

  int num_r() const { return static_cast<int>(r_members.size()); }
  int num_l() const { return static_cast<int>(l_members.size()); }
  int num_j() const { return static_cast<int>(j_members.size()); }
  int num_h() const { return static_cast<int>(h_members.size()); }

  // Within one J-class all H-classes share a size: the order of the
  // Schutzenberger group. Checked during construction.
  int schutzenberger_order(int j) const;
};

GreenData green_data(const EnumeratedSemigroup& s);

// The group sitting inside a group H-class, with its identity (the unique
// idempotent of the class) mapped to group index 0. elements[i] is the
// semigroup index realizing group element i.
struct MaximalSubgroup {
  Group group;
  std::vector<int> elements;
};

MaximalSubgroup maximal_subgroup(const EnumeratedSemigroup& s,
                                 const GreenData& gd, int h_class);

// Every subgroup trivial, i.e. every H-class a singleton.
bool is_aperiodic(const GreenData& gd);

}  // namespace smgkit
