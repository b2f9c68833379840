#ifndef WORDSETS_WORD_HPP
#define WORDSETS_WORD_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wordsets {

// A nonempty string over the two-letter alphabet {a, b}. There is no empty
// word anywhere in this library; every operation preserves that invariant.
class Word {
 public:
  explicit Word(std::string_view text) : digits_(text) { validate(digits_); }

  const std::string& text() const { return digits_; }
  std::string_view view() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  char at(std::size_t i) const { return digits_[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex; used only as a container order, not a theory order.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    if (auto c = x.size() <=> y.size(); c != 0) return c;
    return x.digits_ <=> y.digits_;
  }

 private:
  static void validate(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("word: empty string");
    for (char c : s)
      if (c != 'a' && c != 'b')
        throw std::invalid_argument("word: digit must be 'a' or 'b'");
  }

  std::string digits_;
};

using WordSet = std::set<Word>;

// A run of b's, identified by its positive length.
class Tally {
 public:
  explicit Tally(std::size_t length) : length_(length) {
    if (length == 0) throw std::invalid_argument("tally: length must be positive");
  }

  std::size_t length() const { return length_; }
  Word word() const { return Word(std::string(length_, 'b')); }

  friend bool operator==(const Tally&, const Tally&) = default;
  friend std::strong_ordering operator<=>(const Tally&, const Tally&) = default;

 private:
  std::size_t length_;
};

struct SegmentRelation {
  bool equal = false;
  bool begins = false;  // proper prefix
  bool ends = false;    // proper suffix
  bool within = false;  // occurs with nonempty material on both sides
  bool subpart() const { return equal || begins || ends || within; }
};

struct TallyInfo {
  bool is_tally = false;
  bool is_digit = false;
  std::optional<Tally> max_occurring;  // longest b-run, absent if no b occurs
  Tally min_nonoccurring;              // shortest b-tally not occurring
};

Word concat(const Word& x, const Word& y);
Word succ(const Word& x);

SegmentRelation segment_relation(const Word& x, const Word& y);
bool begins(const Word& x, const Word& y);  // x a proper prefix of y
bool ends_in(const Word& x, const Word& y);
bool subpart(const Word& x, const Word& y);  // x occurs in y (or equals it)

// xRy: x = a and y != a, or x a proper prefix of y.
bool r_less(const Word& x, const Word& y);
// The partial order induced by R (prefix order with a at the bottom).
bool leq(const Word& x, const Word& y);

// Length of the longest run of b's (0 when no b occurs).
std::size_t max_run(std::string_view w);
std::size_t max_run(const Word& w);

TallyInfo tally_ops(const Word& w);

// Checks that no z with zRw or z = w is its own proper initial segment.
// True of every standard word; exists so the claim stays a tested fact.
bool is_tractable(const Word& w);

}  // namespace wordsets

#endif
