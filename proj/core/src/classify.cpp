#include "smgkit/classify.hpp"

#include <algorithm>

#include "smgkit/errors.hpp"

namespace smgkit {

std::string to_string(MonoidCategory c) {
  switch (c) {
    case MonoidCategory::Group: return "group";
    case MonoidCategory::GroupWithZero: return "group-with-zero";
    case MonoidCategory::Small: return "small";
    case MonoidCategory::Smallish: return "smallish";
    case MonoidCategory::General: return "general";
  }
  return "general";
}

namespace {

std::vector<int> set_product(const EnumeratedSemigroup& s,
                             const std::vector<int>& x,
                             const std::vector<int>& y) {
  std::vector<char> hit(static_cast<size_t>(s.size()), 0);
  for (int a : x)
    for (int b : y) hit[static_cast<size_t>(s.mul(a, b))] = 1;
  std::vector<int> out;
  for (int i = 0; i < s.size(); ++i)
    if (hit[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

}  // namespace

Classification classify_monoid(const EnumeratedSemigroup& s,
                               const GreenData& gd) {
  if (s.identity_index() < 0)
    throw ValidationError("classify: no identity element, not a monoid");

  Classification c;
  c.has_zero = s.zero_index() >= 0;
  c.units =
      gd.h_members[static_cast<size_t>(gd.h_of[static_cast<size_t>(s.identity_index())])];
  std::sort(c.units.begin(), c.units.end());

  std::vector<int> nonunits;
  {
    std::vector<char> is_unit(static_cast<size_t>(s.size()), 0);
    for (int u : c.units) is_unit[static_cast<size_t>(u)] = 1;
    for (int i = 0; i < s.size(); ++i)
      if (!is_unit[static_cast<size_t>(i)]) nonunits.push_back(i);
  }

  if (nonunits.empty() ||
      (nonunits.size() == 1 && nonunits[0] == s.zero_index())) {
    c.category = nonunits.empty() ? MonoidCategory::Group
                                  : MonoidCategory::GroupWithZero;
    return c;
  }

  bool census = false, powers = false;
  std::vector<int> ideal_with_zero;
  if (c.has_zero) {
    ZeroMinimalIdeal zmi;
    bool have_zmi = true;
    try {
      zmi = zero_minimal_ideal(s, gd);
    } catch (const ValidationError&) {
      have_zmi = false;
    }
    if (have_zmi && zmi.zero_simple) {
      ideal_with_zero = zmi.nonzero;
      ideal_with_zero.push_back(s.zero_index());
      std::sort(ideal_with_zero.begin(), ideal_with_zero.end());

      // Census: the regular J-classes are exactly the units, the ideal
      // class and {0}.
      int ju = gd.j_of[static_cast<size_t>(s.identity_index())];
      int jz = gd.j_of[static_cast<size_t>(s.zero_index())];
      census = true;
      for (int j = 0; j < gd.num_j(); ++j) {
        bool expected = j == ju || j == jz || j == zmi.j_class;
        if (static_cast<bool>(gd.j_regular[static_cast<size_t>(j)]) != expected)
          census = false;
      }

      // Powers: iterate I^{k+1} = I^k I until stable, compare with the
      // closed form I E(I) I.
      std::vector<int> cur = nonunits;
      int k = 1;
      while (true) {
        std::vector<int> next = set_product(s, cur, nonunits);
        if (next == cur) break;
        cur = std::move(next);
        ++k;
      }
      c.ideal_power = k;
      std::vector<int> idem;
      for (int x : nonunits)
        if (s.is_idempotent(x)) idem.push_back(x);
      std::vector<int> iei =
          set_product(s, set_product(s, nonunits, idem), nonunits);
      if (iei != cur)
        throw ConsistencyError(
            "classify: stable ideal power disagrees with I E(I) I");
      powers = cur == ideal_with_zero;
    }
  }
  if (census != powers)
    throw ConsistencyError(
        "classify: regular J-class census and ideal powers disagree on "
        "smallishness");

  c.is_smallish = powers;
  if (c.is_smallish) {
    c.ideal_with_zero = ideal_with_zero;
    c.is_small =
        c.units.size() + ideal_with_zero.size() == static_cast<size_t>(s.size());
    c.category = c.is_small ? MonoidCategory::Small : MonoidCategory::Smallish;
  }
  return c;
}

std::vector<int> small_submonoid_members(const Classification& c) {
  if (!c.is_smallish)
    throw ValidationError(
        "small_submonoid: monoid is not smallish, no distinguished ideal");
  std::vector<int> out = c.units;
  out.insert(out.end(), c.ideal_with_zero.begin(), c.ideal_with_zero.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace smgkit
