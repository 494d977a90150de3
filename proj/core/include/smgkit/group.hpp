#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace smgkit {

// Finite group given by its multiplication table. Elements are dense
// indices 0..order-1; index 0 is always the identity.
class Group {
public:
  using Elem = int;

  // Default-constructs the trivial group.
  Group() : names_{"1"}, table_{{0}}, inv_{0} {}

  // Table must be a Latin square with row/col 0 acting as identity and
  // every element invertible; throws ValidationError with a witness if not.
  static Group from_table(std::vector<std::string> names,
                          std::vector<std::vector<int>> table);

  // Cyclic group of order n, elements named "1", "g", "g^2", ...
  // For n == 2 the nonidentity element is named "-1".
  static Group cyclic(int n);

  int order() const { return static_cast<int>(names_.size()); }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[a][static_cast<size_t>(b)]; }
  Elem inv(Elem a) const { return inv_[static_cast<size_t>(a)]; }
  const std::string& name(Elem a) const { return names_[static_cast<size_t>(a)]; }
  const std::vector<std::string>& names() const { return names_; }

  // Index of the named element; throws ValidationError if unknown.
  Elem index_of(const std::string& name) const;  // throws on unknown names
  int find_name(const std::string& name) const;  // -1 on unknown names

  bool is_trivial() const { return order() == 1; }

  // Order of the cyclic subgroup generated by a.
  int element_order(Elem a) const;

  bool operator==(const Group& o) const {
    return names_ == o.names_ && table_ == o.table_;
  }

private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<Elem> inv_;
};

// True iff the two groups are isomorphic. Brute force over generator
// images; intended for the small groups that arise as maximal subgroups.
bool groups_isomorphic(const Group& g, const Group& h);

}  // namespace smgkit
