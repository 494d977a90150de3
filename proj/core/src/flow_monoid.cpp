#include "smgkit/flow_monoid.hpp"

#include <unordered_map>

#include "smgkit/errors.hpp"

namespace smgkit {

M0Result enumerate_m0(const LatticeHandle& lat,
                      const std::vector<RowMonomialElement>& letters,
                      const M0Caps& caps) {
  M0Result out;
  std::unordered_map<BoolRelation, int, BoolRelationHash> seen;
  auto add = [&](const BoolRelation& r) {
    auto it = seen.find(r);
    if (it != seen.end()) return it->second;
    if (out.elems.size() >= caps.max_elements)
      throw CapExceededError("0-flow monoid elements", caps.max_elements);
    const int id = static_cast<int>(out.elems.size());
    out.elems.push_back(r);
    seen.emplace(r, id);
    return id;
  };

  add(BoolRelation::identity(lat.size()));
  std::vector<int> atoms;  // generating set, grows with backs and loops
  for (const auto& l : letters) {
    const int id = add(free_flow(lat, l));
    out.letter_flow.push_back(id);
    atoms.push_back(id);
  }

  // Alternate product closure over the atoms with the unary closures until
  // a full round adds nothing. Unary results join the atoms, so products
  // involving them are picked up by the next round.
  for (out.rounds = 1; out.rounds <= caps.max_rounds; ++out.rounds) {
    const size_t before = out.elems.size();
    // right-products by atoms reach every word in the atoms
    for (size_t i = 0; i < out.elems.size(); ++i)
      for (size_t a = 0; a < atoms.size(); ++a)
        add(out.elems[i].product(out.elems[static_cast<size_t>(atoms[a])]));
    const size_t after_products = out.elems.size();
    for (size_t i = 0; i < after_products; ++i) {
      const BoolRelation u = out.elems[i];
      const int b = add(back_flow(u));
      const int lp = add(loop_power(u));
      if (b >= static_cast<int>(before)) atoms.push_back(b);
      if (lp >= static_cast<int>(before)) atoms.push_back(lp);
    }
    // dedupe atoms added twice across rounds
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    if (out.elems.size() == before) break;
  }
  if (out.rounds > caps.max_rounds)
    throw CapExceededError("0-flow monoid rounds", caps.max_rounds);

  // V: diagonal on the intersection of all domains
  std::vector<char> dom(static_cast<size_t>(lat.size()), 1);
  for (const auto& e : out.elems) {
    const auto d = e.domain();
    for (size_t i = 0; i < dom.size(); ++i) dom[i] = dom[i] && d[i];
  }
  const BoolRelation v = BoolRelation::diagonal(dom);
  auto it = seen.find(v);
  if (it == seen.end())
    throw ConsistencyError("vacuum escaped the closed monoid");
  out.vacuum = it->second;
  return out;
}

BoolRelation interpret_wff(const M0Result& m0, const WFF& w) {
  const BoolRelation& v = m0.elems[static_cast<size_t>(m0.vacuum)];
  switch (w.kind) {
    case WFF::Kind::kEmpty:
      return v;
    case WFF::Kind::kLetter: {
      if (w.letter < 0 || w.letter >= static_cast<int>(m0.letter_flow.size()))
        throw ValidationError("formula letter out of range");
      const BoolRelation& f =
          m0.elems[static_cast<size_t>(m0.letter_flow[static_cast<size_t>(w.letter)])];
      return v.product(f).product(v);
    }
    case WFF::Kind::kConcat: {
      BoolRelation acc = v;
      for (const auto& k : w.kids) acc = acc.product(interpret_wff(m0, k));
      return acc;
    }
    case WFF::Kind::kLoop: {
      if (w.kids.size() != 1) throw ValidationError("loop takes one body");
      return loop_power(interpret_wff(m0, w.kids[0]));
    }
  }
  throw ConsistencyError("unreachable formula kind");
}

std::vector<int> primitive_root(const std::vector<int>& word) {
  const size_t n = word.size();
  for (size_t p = 1; p <= n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (size_t i = p; i < n && ok; ++i) ok = word[i] == word[i - p];
    if (ok) return std::vector<int>(word.begin(), word.begin() + static_cast<long>(p));
  }
  return word;
}

}  // namespace smgkit
