#ifndef WORDSETS_SETCODE_HPP
#define WORDSETS_SETCODE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordsets/order.hpp"
#include "wordsets/word.hpp"

namespace wordsets {

// A word that is not usable where a set code (or canonical set code) is
// required, or a malformed set literal.
struct code_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One frame t1 . a v a . t2 of a set code. `payload` is the member v; the
// framed text is a*v*a. A single-frame code has first and last both set.
// `preceding` is the prefix of the code before the separator a of an
// intermediate or non-initial last frame.
struct Frame {
  Tally initial;
  Word payload;
  Tally terminal;
  bool first = false;
  bool last = false;
  std::optional<Word> preceding;
  std::size_t begin = 0;  // offsets of t1 ... t2 within the host code
  std::size_t end = 0;

  bool intermediate() const { return !first && !last; }
  Word framed() const { return concat(concat(Word("a"), payload), Word("a")); }
};

struct ParsedCode {
  Tally envelope;
  std::vector<Frame> frames;  // left to right
};

struct CodeClass {
  bool is_set = false;
  bool is_min = false;
  bool is_lex = false;
  bool is_special = false;
  bool is_canonical = false;
  std::optional<Tally> envelope;
};

// Frames of x in span order, with no envelope validation. Lexicographic
// ordering of a code is a fact about its frames whether or not the whole
// word is enveloped, so this is exposed separately from parse_frames.
std::vector<Frame> collect_frames(const Word& x);

// The envelope and frames of x, or absent when no tally envelops x (the
// word aa has no frames and is also reported absent here; it is still a
// set code by is_set).
std::optional<ParsedCode> parse_frames(const Word& x);

bool is_set(const Word& x);

// Throws code_error when x is not a set code; aa decodes to the empty set.
WordSet members(const Word& x);

// y is a member of the set coded by x.
bool member(const Word& y, const Word& x);

CodeClass classify(const Word& x);

// The unique canonical code of S: members ascending in mlex order, each
// initial marker the shortest tally longer than the previous marker and
// than every b-run of its member; the last marker is doubled. aa for the
// empty set.
Word canonical_encode(const WordSet& members);

// Canonical code of members(x) + {y}. Requires canonical x.
Word adjoin(const Word& x, const Word& y);

// Both words are set codes and their member sets coincide.
bool same_members(const Word& x, const Word& y);

// Single-marker list coding: t a w1 a t a w2 a t ... a wn a t with t the
// shortest tally longer than every b-run of every wi. Order preserved,
// duplicates kept. Throws code_error on an empty list.
Word quine_encode(const std::vector<Word>& items);

// Membership in a single-marker coded list.
bool quine_member(const Word& x, const Word& w);

// Brace literal helpers for the CLI: "{a,ab}" <-> set. Output is sorted by
// mlex_less.
WordSet parse_set_literal(const std::string& text);
std::string format_set(const WordSet& s);

}  // namespace wordsets

#endif
