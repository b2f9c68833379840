#ifndef WORDSETS_DEFINITIONAL_HPP
#define WORDSETS_DEFINITIONAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "wordsets/word.hpp"

namespace wordsets::defs {

// Slow evaluator for the set-code predicates, transcribed clause by clause
// with quantifiers ranging over segments. Independent of the structural
// parser in setcode.cpp; the two are compared over whole length universes.

// A frame triple by value: initial marker length, framed string a v a given
// by its member core v, terminal marker length, and which frame predicates
// hold of it.
struct FrameValue {
  std::size_t initial;
  Word payload;
  std::size_t terminal;
  bool first = false;
  bool intermediate = false;
  bool last = false;

  friend bool operator==(const FrameValue&, const FrameValue&) = default;
  friend auto operator<=>(const FrameValue&, const FrameValue&) = default;
};

bool is_set(const Word& x);
bool eps(const Word& y, const Word& x);

// All tally lengths t with Env(t, x); empty when x is not enveloped.
std::vector<std::size_t> envelopes(const Word& x);

// Every (t1, u, t2) framed in x, sorted; computed whether or not x is
// enveloped (used for envelope condition checks and the parser comparison).
std::vector<FrameValue> frame_triples(const Word& x);

// Member values read off the frames of an enveloped x.
std::optional<WordSet> members(const Word& x);

}  // namespace wordsets::defs

#endif
