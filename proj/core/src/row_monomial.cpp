#include "smgkit/row_monomial.hpp"

#include "smgkit/errors.hpp"

namespace smgkit {

bool RowMonomialElement::is_zero() const {
  for (int d : dest)
    if (d >= 0) return false;
  return true;
}

int RowMonomialElement::domain_size() const {
  int n = 0;
  for (int d : dest)
    if (d >= 0) ++n;
  return n;
}

std::size_t RowMonomialHash::operator()(const RowMonomialElement& e) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  for (size_t i = 0; i < e.dest.size(); ++i) {
    mix(e.dest[i]);
    mix(e.dest[i] >= 0 ? e.label[i] : 0);
  }
  return h;
}

RowMonomialElement rm_identity(const Group& g, int base_size) {
  RowMonomialElement e;
  e.dest.resize(static_cast<size_t>(base_size));
  e.label.assign(static_cast<size_t>(base_size), g.identity());
  for (int b = 0; b < base_size; ++b) e.dest[static_cast<size_t>(b)] = b;
  return e;
}

RowMonomialElement rm_zero(int base_size) {
  RowMonomialElement e;
  e.dest.assign(static_cast<size_t>(base_size), -1);
  e.label.assign(static_cast<size_t>(base_size), 0);
  return e;
}

RowMonomialElement rm_compose(const Group& g, const RowMonomialElement& s,
                              const RowMonomialElement& t) {
  if (s.base_size() != t.base_size())
    throw ValidationError("rm_compose: mismatched base sizes " +
                          std::to_string(s.base_size()) + " vs " +
                          std::to_string(t.base_size()));
  RowMonomialElement r = rm_zero(s.base_size());
  for (int b = 0; b < s.base_size(); ++b) {
    int mid = s.dest[static_cast<size_t>(b)];
    if (mid < 0) continue;
    int end = t.dest[static_cast<size_t>(mid)];
    if (end < 0) continue;
    r.dest[static_cast<size_t>(b)] = end;
    r.label[static_cast<size_t>(b)] = g.mul(s.label[static_cast<size_t>(b)],
                                            t.label[static_cast<size_t>(mid)]);
  }
  return r;
}

std::optional<std::pair<int, int>> rm_act(const Group& g, int h, int b,
                                          const RowMonomialElement& s) {
  int b2 = s.dest[static_cast<size_t>(b)];
  if (b2 < 0) return std::nullopt;
  return std::make_pair(g.mul(h, s.label[static_cast<size_t>(b)]), b2);
}

std::string rm_format(const RowMonomialElement& e, const Group& g,
                      const std::vector<std::string>& b_names) {
  if (e.is_zero()) return "0";
  std::string out;
  for (int b = 0; b < e.base_size(); ++b) {
    if (!e.defined_at(b)) continue;
    if (!out.empty()) out += ", ";
    out += b_names[static_cast<size_t>(b)];
    out += " -> ";
    out += g.name(e.label[static_cast<size_t>(b)]);
    out += ".";
    out += b_names[static_cast<size_t>(e.dest[static_cast<size_t>(b)])];
  }
  return out;
}

}  // namespace smgkit
