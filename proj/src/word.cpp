#include "wordsets/word.hpp"

namespace wordsets {

Word concat(const Word& x, const Word& y) {
  std::string s;
  s.reserve(x.size() + y.size());
  s.append(x.text());
  s.append(y.text());
  return Word(s);
}

Word succ(const Word& x) {
  if (x.view() == "a") return Word("b");
  return Word(x.text() + "b");
}

bool begins(const Word& x, const Word& y) {
  return x.size() < y.size() && y.view().substr(0, x.size()) == x.view();
}

bool ends_in(const Word& x, const Word& y) {
  return x.size() < y.size() && y.view().substr(y.size() - x.size()) == x.view();
}

bool subpart(const Word& x, const Word& y) {
  return x.size() <= y.size() && y.view().find(x.view()) != std::string_view::npos;
}

SegmentRelation segment_relation(const Word& x, const Word& y) {
  SegmentRelation r;
  r.equal = x == y;
  r.begins = begins(x, y);
  r.ends = ends_in(x, y);
  if (x.size() + 2 <= y.size()) {
    // an occurrence strictly inside: nonempty words on both sides
    auto inner = y.view().substr(1, y.size() - x.size() - 1);
    r.within = inner.find(x.view()) != std::string_view::npos;
  }
  return r;
}

bool r_less(const Word& x, const Word& y) {
  if (x.view() == "a" && y.view() != "a") return true;
  return begins(x, y);
}

bool leq(const Word& x, const Word& y) { return x == y || r_less(x, y); }

std::size_t max_run(std::string_view w) {
  std::size_t best = 0, cur = 0;
  for (char c : w) {
    if (c == 'b') {
      ++cur;
      if (cur > best) best = cur;
    } else {
      cur = 0;
    }
  }
  return best;
}

std::size_t max_run(const Word& w) { return max_run(w.view()); }

TallyInfo tally_ops(const Word& w) {
  std::size_t longest = max_run(w);
  TallyInfo info{
      .is_tally = longest == w.size(),
      .is_digit = w.size() == 1,
      .max_occurring = longest > 0 ? std::optional<Tally>(Tally(longest)) : std::nullopt,
      .min_nonoccurring = Tally(longest + 1),
  };
  return info;
}

bool is_tractable(const Word& w) {
  // The only z with zRw or z = w are a, the proper prefixes of w, and w.
  auto self_initial = [](const Word& z) { return r_less(z, z); };
  if (self_initial(Word("a"))) return false;
  for (std::size_t len = 1; len < w.size(); ++len)
    if (self_initial(Word(w.view().substr(0, len)))) return false;
  return !self_initial(w);
}

}  // namespace wordsets
