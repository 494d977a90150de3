#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "smgkit/enumerate.hpp"
#include "smgkit/group.hpp"
#include "smgkit/rees.hpp"
#include "smgkit/row_monomial.hpp"

namespace smgkit {

// A semigroup of G-labeled partial maps on a base set, described either by
// the structure matrix of an ideal plus extra generators, or by plain
// generators. See docs/formats.md for the JSON shape.
struct SemigroupDescription {
  std::string name;
  Group group;
  std::vector<std::string> b_names;

  bool has_rees = false;
  ReesStructure rees;        // when has_rees
  int distinguished_a = -1;  // index into rees.a_names, -1 when unset
  bool all_ideal_generators = false;
  std::vector<ReesTriple> ideal_generators;  // when not all_ideal_generators
  bool ideal_zero_generator = false;

  // Named edge maps; order follows the file.
  std::vector<std::pair<std::string, RowMonomialElement>> extra_generators;
  bool monoid = false;

  // Set on files emitted by the ev pipeline: the source description and
  // the clock size used.
  std::shared_ptr<SemigroupDescription> ev_of;
  int ev_n = -1;
};

SemigroupDescription parse_description(const std::string& json_text);
SemigroupDescription load_description(const std::string& path);
std::string description_to_json(const SemigroupDescription& d);

// Generator list in file order: ideal triples (a-major, then group index,
// then b), the zero if requested, extra generators, and a trailing
// identity generator named "id" when the monoid flag is set.
std::vector<std::pair<std::string, RowMonomialElement>> description_generators(
    const SemigroupDescription& d);

EnumeratedSemigroup build_semigroup(const SemigroupDescription& d,
                                    std::size_t cap);

// Applies normalize_structure_matrix scaling p to the whole description:
// matrix rows, extra-generator edges (label conjugation), leaving the
// described semigroup isomorphic. Sets distinguished_a.
SemigroupDescription normalize_description(const SemigroupDescription& d,
                                           int a0);

}  // namespace smgkit
