#include "wordsets/order.hpp"

namespace wordsets {

namespace {

std::size_t common_prefix_len(std::string_view x, std::string_view y) {
  std::size_t n = std::min(x.size(), y.size());
  std::size_t i = 0;
  while (i < n && x[i] == y[i]) ++i;
  return i;
}

}  // namespace

std::optional<Word> left_root(const Word& x, const Word& y) {
  std::size_t cp = common_prefix_len(x.view(), y.view());
  if (cp == 0) return std::nullopt;                      // first digits differ
  if (cp == x.size() || cp == y.size()) return std::nullopt;  // prefix cases
  return Word(x.view().substr(0, cp));
}

bool lex_precedes(const Word& u, const Word& v) {
  std::size_t cp = common_prefix_len(u.view(), v.view());
  if (cp == u.size()) return cp < v.size();  // proper prefix; equal is not less
  if (cp == v.size()) return false;
  return u.at(cp) == 'a' && v.at(cp) == 'b';
}

OrderVerdict nonocc_tally_compare(const Word& u, const Word& v) {
  std::size_t mu = max_run(u), mv = max_run(v);
  if (mu < mv) return OrderVerdict::Less;
  if (mu > mv) return OrderVerdict::Greater;
  return OrderVerdict::Equal;
}

bool mlex_less(const Word& u, const Word& v) {
  switch (nonocc_tally_compare(u, v)) {
    case OrderVerdict::Less: return true;
    case OrderVerdict::Greater: return false;
    case OrderVerdict::Equal: return lex_precedes(u, v);
  }
  return false;
}

namespace defs {

namespace {

// z*a = w or z*a begins w
bool extends_with(const Word& z, char d, const Word& w) {
  if (z.size() >= w.size()) return false;
  return w.view().substr(0, z.size()) == z.view() && w.at(z.size()) == d;
}

bool root_relation(const Word& z, const Word& x, const Word& y) {
  return (extends_with(z, 'a', x) && extends_with(z, 'b', y)) ||
         (extends_with(z, 'b', x) && extends_with(z, 'a', y));
}

// The unique shortest tally longer than every tally occurring in u, found by
// scanning candidate lengths and checking the defining clauses one by one.
Tally minmax_nonocc(const Word& u) {
  auto occurs = [&](std::size_t len) { return subpart(Tally(len).word(), u); };
  auto maxplus = [&](std::size_t len) {
    for (std::size_t l2 = 1; l2 <= u.size(); ++l2)
      if (occurs(l2) && l2 > len) return false;  // some occurring tally exceeds it
    return !occurs(len);
  };
  for (std::size_t len = 1; len <= u.size() + 1; ++len) {
    if (!maxplus(len)) continue;
    bool minimal = true;
    for (std::size_t l2 = 1; l2 < len; ++l2)
      if (maxplus(l2)) minimal = false;
    if (minimal) return Tally(len);
  }
  return Tally(u.size() + 1);  // unreachable
}

}  // namespace

std::optional<Word> left_root(const Word& x, const Word& y) {
  std::optional<Word> found;
  for (std::size_t len = 1; len < x.size(); ++len) {
    Word z(x.view().substr(0, len));
    if (root_relation(z, x, y)) {
      if (found) throw std::logic_error("left root not unique");
      found = z;
    }
  }
  return found;
}

bool lex_precedes(const Word& u, const Word& v) {
  bool u_a = u.view() == "a" || u.at(0) == 'a';
  bool v_b = v.view() == "b" || v.at(0) == 'b';
  if (u_a && v_b) return true;
  if (begins(u, v)) return true;
  for (std::size_t len = 1; len < u.size(); ++len) {
    Word z(u.view().substr(0, len));
    if (root_relation(z, u, v) && extends_with(z, 'a', u) && extends_with(z, 'b', v))
      return true;
  }
  return false;
}

bool nonocc_less(const Word& u, const Word& v) {
  return minmax_nonocc(u) < minmax_nonocc(v);
}

bool nonocc_same(const Word& u, const Word& v) {
  return minmax_nonocc(u) == minmax_nonocc(v);
}

bool mlex_less(const Word& u, const Word& v) {
  return nonocc_less(u, v) || (nonocc_same(u, v) && defs::lex_precedes(u, v));
}

}  // namespace defs

}  // namespace wordsets
