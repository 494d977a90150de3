#include "smgkit/enumerate.hpp"

#include <algorithm>

#include "smgkit/errors.hpp"

namespace smgkit {

namespace {
// Above this element count products are recomputed on demand instead of
// being tabulated (the dense table would need size^2 ints).
constexpr int kDenseTableLimit = 4096;
}  // namespace

EnumeratedSemigroup EnumeratedSemigroup::enumerate(
    Group group, int base_size,
    std::vector<std::pair<std::string, RowMonomialElement>> generators,
    std::size_t cap) {
  if (generators.empty())
    throw ValidationError("enumerate: empty generator list");
  EnumeratedSemigroup s;
  s.group_ = std::move(group);
  s.base_size_ = base_size;
  for (auto& [name, elem] : generators) {
    if (elem.base_size() != base_size)
      throw ValidationError("enumerate: generator " + name + " has base size " +
                            std::to_string(elem.base_size()) + ", expected " +
                            std::to_string(base_size));
    for (int b = 0; b < base_size; ++b)
      if (elem.defined_at(b) &&
          (elem.label[static_cast<size_t>(b)] < 0 ||
           elem.label[static_cast<size_t>(b)] >= s.group_.order()))
        throw ValidationError("enumerate: generator " + name +
                              " has an out-of-range label at position " +
                              std::to_string(b));
    auto [it, fresh] =
        s.index_.emplace(elem, static_cast<int>(s.elements_.size()));
    if (fresh) {
      s.elements_.push_back(elem);
      s.parent_.emplace_back(-1, static_cast<int>(s.gen_elem_.size()));
    }
    s.gen_names_.push_back(std::move(name));
    s.gen_elem_.push_back(it->second);
  }

  for (std::size_t head = 0; head < s.elements_.size(); ++head) {
    for (size_t g = 0; g < s.gen_elem_.size(); ++g) {
      // Skip duplicate generator entries so each edge is explored once.
      if (s.parent_[static_cast<size_t>(s.gen_elem_[g])].second !=
          static_cast<int>(g))
        continue;
      RowMonomialElement prod = rm_compose(
          s.group_, s.elements_[head],
          s.elements_[static_cast<size_t>(s.gen_elem_[g])]);
      auto [it, fresh] =
          s.index_.emplace(prod, static_cast<int>(s.elements_.size()));
      if (fresh) {
        if (s.elements_.size() >= cap)
          throw CapExceededError(
              "enumerate: closure exceeds cap of " + std::to_string(cap) +
                  " elements",
              s.elements_.size());
        s.elements_.push_back(std::move(prod));
        s.parent_.emplace_back(static_cast<int>(head), static_cast<int>(g));
      }
    }
  }
  s.finish();
  return s;
}

EnumeratedSemigroup EnumeratedSemigroup::sub_semigroup(
    const EnumeratedSemigroup& parent, const std::vector<int>& subset) {
  if (subset.empty())
    throw ValidationError("sub_semigroup: empty element subset");
  EnumeratedSemigroup s;
  s.group_ = parent.group_;
  s.base_size_ = parent.base_size_;
  for (int idx : subset) {
    const RowMonomialElement& e = parent.elem(idx);
    auto [it, fresh] =
        s.index_.emplace(e, static_cast<int>(s.elements_.size()));
    if (!fresh) continue;
    s.elements_.push_back(e);
    s.parent_.emplace_back(-1, static_cast<int>(s.gen_elem_.size()));
    s.gen_names_.push_back("x" + std::to_string(idx));
    s.gen_elem_.push_back(it->second);
  }
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      RowMonomialElement prod =
          rm_compose(s.group_, s.elements_[static_cast<size_t>(a)],
                     s.elements_[static_cast<size_t>(b)]);
      if (!s.index_.count(prod))
        throw ValidationError(
            "sub_semigroup: subset not closed, witness product of elements " +
            std::to_string(a) + " and " + std::to_string(b));
    }
  s.finish();
  return s;
}

void EnumeratedSemigroup::finish() {
  RowMonomialElement id = rm_identity(group_, base_size_);
  RowMonomialElement zero = rm_zero(base_size_);
  auto it = index_.find(id);
  identity_index_ = it == index_.end() ? -1 : it->second;
  it = index_.find(zero);
  zero_index_ = it == index_.end() ? -1 : it->second;

  if (size() <= kDenseTableLimit) {
    mul_table_.assign(static_cast<size_t>(size()) * static_cast<size_t>(size()),
                      -1);
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b) {
        RowMonomialElement prod =
            rm_compose(group_, elements_[static_cast<size_t>(a)],
                       elements_[static_cast<size_t>(b)]);
        auto pit = index_.find(prod);
        if (pit == index_.end())
          throw ConsistencyError(
              "semigroup not closed under multiplication at (" +
              std::to_string(a) + "," + std::to_string(b) + ")");
        mul_table_[static_cast<size_t>(a) * static_cast<size_t>(size()) +
                   static_cast<size_t>(b)] = pit->second;
      }
  }
}

int EnumeratedSemigroup::index_of(const RowMonomialElement& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

int EnumeratedSemigroup::mul(int a, int b) const {
  if (!mul_table_.empty())
    return mul_table_[static_cast<size_t>(a) * static_cast<size_t>(size()) +
                      static_cast<size_t>(b)];
  RowMonomialElement prod =
      rm_compose(group_, elements_[static_cast<size_t>(a)],
                 elements_[static_cast<size_t>(b)]);
  auto it = index_.find(prod);
  if (it == index_.end())
    throw ConsistencyError("semigroup not closed under multiplication at (" +
                           std::to_string(a) + "," + std::to_string(b) + ")");
  return it->second;
}

std::vector<int> EnumeratedSemigroup::idempotents() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (is_idempotent(i)) out.push_back(i);
  return out;
}

std::vector<int> EnumeratedSemigroup::word_of(int i) const {
  std::vector<int> word;
  int cur = i;
  while (cur >= 0) {
    auto [p, g] = parent_[static_cast<size_t>(cur)];
    word.push_back(g);
    cur = p;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

LabelForgetfulQuotient rlm(const EnumeratedSemigroup& s, std::size_t cap) {
  Group trivial = Group::cyclic(1);
  auto strip = [](const RowMonomialElement& e) {
    RowMonomialElement out = e;
    for (size_t b = 0; b < out.label.size(); ++b)
      if (out.dest[b] >= 0) out.label[b] = 0;
    return out;
  };
  std::vector<std::pair<std::string, RowMonomialElement>> gens;
  for (int g = 0; g < s.num_generators(); ++g)
    gens.emplace_back(s.generator_name(g), strip(s.elem(s.generator(g))));
  LabelForgetfulQuotient out{
      EnumeratedSemigroup::enumerate(trivial, s.base_size(), std::move(gens),
                                     cap),
      {}};
  out.map.reserve(static_cast<size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) {
    int img = out.quotient.index_of(strip(s.elem(i)));
    if (img < 0)
      throw ConsistencyError("rlm: image of element " + std::to_string(i) +
                             " missing from the label-forgetful quotient");
    out.map.push_back(img);
  }
  return out;
}

}  // namespace smgkit
