#pragma once

#include <cstddef>
#include <vector>

#include "smgkit/closure_relation.hpp"

namespace smgkit {

struct M0Caps {
  std::size_t max_elements = 20000;
  std::size_t max_rounds = 64;
};

// The 0-flow monoid over L: the identity and the letters' free flows,
// closed under product, back flow and loop. elems[0] is the identity;
// letter_flow[i] indexes the free flow of letter i; vacuum indexes V,
// the product of every member's back flow (the diagonal on the
// intersection of all domains).
struct M0Result {
  std::vector<BoolRelation> elems;
  std::vector<int> letter_flow;
  int vacuum = -1;
  std::size_t rounds = 0;
};

M0Result enumerate_m0(const LatticeHandle& lat,
                      const std::vector<RowMonomialElement>& letters,
                      const M0Caps& caps = {});

// Flow formulas: the empty word, a letter, a concatenation, or a looped
// subformula. Interpretation sends the empty word to the vacuum, letter x
// to V f_x V, concatenation to the product and loop(w) to the omega-plus-
// Kleene power of w's interpretation.
struct WFF {
  enum class Kind { kEmpty, kLetter, kConcat, kLoop };
  Kind kind = Kind::kEmpty;
  int letter = -1;
  std::vector<WFF> kids;

  static WFF empty() { return WFF{}; }
  static WFF of_letter(int x) {
    WFF w;
    w.kind = Kind::kLetter;
    w.letter = x;
    return w;
  }
  static WFF concat(std::vector<WFF> parts) {
    WFF w;
    w.kind = Kind::kConcat;
    w.kids = std::move(parts);
    return w;
  }
  static WFF loop(WFF body) {
    WFF w;
    w.kind = Kind::kLoop;
    w.kids.push_back(std::move(body));
    return w;
  }
};

BoolRelation interpret_wff(const M0Result& m0, const WFF& w);

// Shortest period root of a word: the unique primitive word whose power
// the input is. Loops are insensitive to powering their body, so formula
// constructions reduce loop bodies to their primitive root first.
std::vector<int> primitive_root(const std::vector<int>& word);

}  // namespace smgkit
