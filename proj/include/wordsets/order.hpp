#ifndef WORDSETS_ORDER_HPP
#define WORDSETS_ORDER_HPP

#include <optional>

#include "wordsets/word.hpp"

namespace wordsets {

enum class OrderVerdict { Less, Equal, Greater };

// Longest common proper prefix of x and y when both continue past it with
// different digits; absent in the degenerate cases (equal words, words that
// are prefixes of one another, first digits already distinct, single digits).
std::optional<Word> left_root(const Word& x, const Word& y);

// Lexical precedence: u a proper prefix of v, or at the first difference u
// carries a where v carries b (a-words precede b-words).
bool lex_precedes(const Word& u, const Word& v);

// Compares the shortest b-tallies not occurring in u and v.
OrderVerdict nonocc_tally_compare(const Word& u, const Word& v);

// Tally-modified lexicographic order: order by shortest non-occurrent tally
// first, lexical precedence as the tie-break. Total on distinct words.
bool mlex_less(const Word& u, const Word& v);

// Slow transcriptions of the defining formulas, quantifying over segments.
// Used to cross-check the structural versions above.
namespace defs {

std::optional<Word> left_root(const Word& x, const Word& y);
bool lex_precedes(const Word& u, const Word& v);
bool nonocc_less(const Word& u, const Word& v);
bool nonocc_same(const Word& u, const Word& v);
bool mlex_less(const Word& u, const Word& v);

}  // namespace defs

}  // namespace wordsets

#endif
