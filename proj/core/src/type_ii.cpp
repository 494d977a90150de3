#include "smgkit/type_ii.hpp"

#include <algorithm>
#include <random>

namespace smgkit {

TypeIICertificate type_ii(const EnumeratedSemigroup& s,
                          std::uint64_t shuffle_seed) {
  const int n = s.size();
  TypeIICertificate cert;
  cert.is_member.assign(static_cast<size_t>(n), 0);

  auto add = [&cert](TypeIIEntry e) {
    if (cert.is_member[static_cast<size_t>(e.element)]) return false;
    cert.is_member[static_cast<size_t>(e.element)] = 1;
    cert.log.push_back(e);
    return true;
  };

  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  if (shuffle_seed) {
    std::mt19937_64 rng(shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  for (int i : order)
    if (s.is_idempotent(i))
      add({TypeIIEntry::Tag::kIdempotent, i, -1, -1, -1});

  bool grew = true;
  while (grew) {
    grew = false;
    // product sweep to closure
    for (size_t i = 0; i < cert.log.size(); ++i)
      for (size_t j = 0; j < cert.log.size(); ++j) {
        int a = cert.log[i].element, b = cert.log[j].element;
        if (add({TypeIIEntry::Tag::kProduct, s.mul(a, b), a, b, -1}))
          grew = true;
      }
    // conjugation sweep over pairs with xyx = x, one pass; the outer loop
    // re-enters while anything grows. xyx = x also holds for x = zero,
    // which only ever contributes zero again; kept for faithfulness.
    for (int x : order)
      for (int y : order) {
        if (s.mul(s.mul(x, y), x) != x) continue;
        for (size_t j = 0; j < cert.log.size(); ++j) {
          int z = cert.log[j].element;
          if (add({TypeIIEntry::Tag::kWeakConjugate, s.mul(s.mul(x, z), y), x,
                   y, z}))
            grew = true;
          if (add({TypeIIEntry::Tag::kWeakConjugate, s.mul(s.mul(y, z), x), x,
                   y, z}))
            grew = true;
        }
      }
  }

  for (const auto& e : cert.log) cert.members.push_back(e.element);
  std::sort(cert.members.begin(), cert.members.end());
  return cert;
}

EnumeratedSemigroup idempotent_generated(const EnumeratedSemigroup& s) {
  std::vector<std::pair<std::string, RowMonomialElement>> gens;
  for (int i : s.idempotents())
    gens.emplace_back("e" + std::to_string(i), s.elem(i));
  return EnumeratedSemigroup::enumerate(s.group(), s.base_size(),
                                        std::move(gens));
}

}  // namespace smgkit
