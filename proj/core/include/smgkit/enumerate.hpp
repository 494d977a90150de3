#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "smgkit/group.hpp"
#include "smgkit/row_monomial.hpp"

namespace smgkit {

// A finite semigroup of row-monomial elements, closed under composition,
// produced by breadth-first closure of a generator list. Element indices
// follow discovery order: generators first (in the given order), then
// products by increasing word length, ties broken by (parent, generator).
class EnumeratedSemigroup {
public:
  static constexpr std::size_t kDefaultCap = 200000;

  // Throws CapExceededError if the closure grows past cap.
  static EnumeratedSemigroup enumerate(
      Group group, int base_size,
      std::vector<std::pair<std::string, RowMonomialElement>> generators,
      std::size_t cap = kDefaultCap);

  // Restriction of `parent` to `subset` (element indices of parent).
  // Every element of the subset becomes a generator of the restriction,
  // keeping its parent formatting name. Throws ValidationError with a
  // witness product if the subset is not closed under multiplication.
  static EnumeratedSemigroup sub_semigroup(const EnumeratedSemigroup& parent,
                                           const std::vector<int>& subset);

  const Group& group() const { return group_; }
  int base_size() const { return base_size_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const RowMonomialElement& elem(int i) const {
    return elements_[static_cast<size_t>(i)];
  }
  const std::vector<RowMonomialElement>& elements() const { return elements_; }

  int num_generators() const { return static_cast<int>(gen_elem_.size()); }
  int generator(int g) const { return gen_elem_[static_cast<size_t>(g)]; }
  const std::string& generator_name(int g) const {
    return gen_names_[static_cast<size_t>(g)];
  }

  // -1 if the element does not belong to the semigroup.
  int index_of(const RowMonomialElement& e) const;

  // Index of the product; throws ConsistencyError if it escapes the set
  // (cannot happen for a set produced by enumerate).
  int mul(int a, int b) const;

  bool is_idempotent(int i) const { return mul(i, i) == i; }
  std::vector<int> idempotents() const;

  int identity_index() const { return identity_index_; }  // -1 if absent
  int zero_index() const { return zero_index_; }          // -1 if absent

  // Generator word (indices into the generator list) whose left-to-right
  // product is element i.
  std::vector<int> word_of(int i) const;

private:
  EnumeratedSemigroup() = default;
  void finish();

  Group group_;
  int base_size_ = 0;
  std::vector<RowMonomialElement> elements_;
  std::vector<std::string> gen_names_;
  std::vector<int> gen_elem_;
  std::vector<std::pair<int, int>> parent_;  // (element, generator), -1 for roots
  int identity_index_ = -1;
  int zero_index_ = -1;
  std::unordered_map<RowMonomialElement, int, RowMonomialHash> index_;
  std::vector<int> mul_table_;  // dense, only when size*size is modest
};

// The action of s on its base set with labels forgotten: generators are
// re-enumerated over the trivial group. `map` sends each element of s to
// its image; the image semigroup is a quotient of s (strictly smaller for
// any semigroup with a nontrivial group coordinate in some regular row).
struct LabelForgetfulQuotient {
  EnumeratedSemigroup quotient;
  std::vector<int> map;
};

LabelForgetfulQuotient rlm(const EnumeratedSemigroup& s,
                           std::size_t cap = EnumeratedSemigroup::kDefaultCap);

}  // namespace smgkit
