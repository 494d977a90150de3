#pragma once

#include <string>
#include <vector>

#include "smgkit/closure_relation.hpp"
#include "smgkit/enumerate.hpp"
#include "smgkit/flow_monoid.hpp"
#include "smgkit/rees.hpp"

namespace smgkit {

// Evaluation transformation semigroup of (G x B, letters): states are the
// least set of vacuum-stable lattice elements containing the points and
// closed under the forward action of every sandwiched monoid member, and
// Eval collects the distinct induced maps (with an absorbing sink for
// undefined moves).
struct EvalReport {
  int lattice_size = 0;
  int m0_size = 0;
  int vacuum_domain_size = 0;
  int states = 0;
  int eval_size = 0;
  bool points_in_vacuum = true;
  bool contradiction = false;
  std::string contradiction_witness;

  std::vector<int> state_elems;             // lattice indices, discovery order
  std::vector<std::vector<int>> eval_maps;  // state ordinal -> ordinal or -1
  std::vector<int> map_of_m0;               // m0 index -> eval map index
};

EvalReport build_eval_ts(const LatticeHandle& lat,
                         const std::vector<RowMonomialElement>& letters,
                         const M0Caps& caps = {});

// Does the source action survive inside the evaluation semigroup of its
// one-shot expansion? Formula mode works pointwise from the construction's
// own data at any scale: the clock letter's pointwise loop must produce
// the full clock orbit, each one-shot generator must replay its source
// element across the orbit, composition must land on the composed
// generator and distinct elements must stay distinct. Full mode builds
// the whole lattice over G x B^Ev, runs the closure engine and reads the
// same action off the real states; the two must agree. action[x][pt] is
// the embedded image of point pt under source element x (-1 = undefined).
struct EmbedReport {
  bool ok = false;
  std::string mode;
  std::string failure;
  int elements = 0;
  int points = 0;
  std::vector<std::vector<int>> action;

  // full mode extras
  EvalReport eval;
};

EmbedReport embed_check_formula(const EnumeratedSemigroup& s,
                                const ReesStructure& rs, int a0);
EmbedReport embed_check_full(const EnumeratedSemigroup& s,
                             const ReesStructure& rs, int a0,
                             std::size_t lattice_cap = 25000,
                             const M0Caps& caps = {});

bool embed_reports_agree(const EmbedReport& a, const EmbedReport& b,
                         std::string* witness);

}  // namespace smgkit
