#include "wordsets/setcode.hpp"

#include <algorithm>
#include <map>

namespace wordsets {

namespace {

struct Run {
  std::size_t start = 0;
  std::size_t len = 0;
  std::size_t end() const { return start + len; }
};

std::vector<Run> b_runs(std::string_view x) {
  std::vector<Run> runs;
  std::size_t i = 0;
  while (i < x.size()) {
    if (x[i] != 'b') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < x.size() && x[j] == 'b') ++j;
    runs.push_back({i, j - i});
    i = j;
  }
  return runs;
}

// pm[i] = longest b-run of x[0..i)
std::vector<std::size_t> prefix_max_run(std::string_view x) {
  std::vector<std::size_t> pm(x.size() + 1, 0);
  std::size_t cur = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cur = x[i] == 'b' ? cur + 1 : 0;
    pm[i + 1] = std::max(pm[i], cur);
  }
  return pm;
}

// The region between two markers must read a v a with v nonempty.
std::optional<Word> payload_core(std::string_view x, std::size_t from, std::size_t to) {
  if (to < from + 3) return std::nullopt;
  if (x[from] != 'a' || x[to - 1] != 'a') return std::nullopt;
  return Word(x.substr(from + 1, to - from - 2));
}

std::optional<Frame> scan_first(std::string_view x, const std::vector<Run>& runs) {
  if (x.empty() || x[0] != 'b') return std::nullopt;
  const Run& t1 = runs.front();
  for (std::size_t i = 1; i < runs.size(); ++i) {
    const Run& r = runs[i];
    if (r.len < t1.len) continue;  // payload tallies stay below the marker
    auto core = payload_core(x, t1.end(), r.start);
    if (!core) return std::nullopt;
    if (r.end() == x.size()) {
      if (r.len != t1.len) return std::nullopt;  // whole-code frame needs equal markers
      Frame f{Tally(t1.len), *core, Tally(r.len)};
      f.first = true;
      f.begin = 0;
      f.end = x.size();
      return f;
    }
    // an inner terminal marker must be strictly longer and more must follow
    if (r.len == t1.len || r.end() + 1 >= x.size()) return std::nullopt;
    Frame f{Tally(t1.len), *core, Tally(r.len)};
    f.first = true;
    f.begin = 0;
    f.end = r.end();
    return f;
  }
  return std::nullopt;
}

std::optional<Frame> scan_last(std::string_view x, const std::vector<Run>& runs,
                               const std::vector<std::size_t>& pm) {
  if (x.empty() || x.back() != 'b') return std::nullopt;
  const Run& t = runs.back();
  for (std::size_t i = runs.size() - 1; i-- > 0;) {
    const Run& r = runs[i];
    if (r.len < t.len) continue;
    if (r.len != t.len) return std::nullopt;  // pre-marker must equal the trailing tally
    auto core = payload_core(x, r.end(), t.start);
    if (!core) return std::nullopt;
    if (r.start == 0) {
      Frame f{Tally(t.len), *core, Tally(t.len)};
      f.last = true;
      f.begin = 0;
      f.end = x.size();
      return f;
    }
    if (r.start < 2) return std::nullopt;        // separator a needs a word before it
    if (pm[r.start - 1] >= t.len) return std::nullopt;
    Frame f{Tally(t.len), *core, Tally(t.len)};
    f.last = true;
    f.begin = r.start;
    f.end = x.size();
    return f;
  }
  return std::nullopt;
}

std::vector<Frame> scan_intermediate(std::string_view x, const std::vector<Run>& runs,
                                     const std::vector<std::size_t>& pm) {
  std::vector<Frame> out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const Run& r = runs[i];
    if (r.start < 2 || x[r.start - 1] != 'a') continue;
    if (pm[r.start - 1] >= r.len) continue;  // marker tops every earlier run
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      const Run& r2 = runs[j];
      if (r2.len < r.len) continue;
      if (r2.len == r.len) break;            // equal run inside the payload region
      if (r2.end() + 1 >= x.size()) break;   // terminal marker needs a and more after
      auto core = payload_core(x, r.end(), r2.start);
      if (!core) break;
      Frame f{Tally(r.len), *core, Tally(r2.len)};
      f.preceding = Word(x.substr(0, r.start - 1));
      f.begin = r.start;
      f.end = r2.end();
      out.push_back(std::move(f));
      break;
    }
  }
  return out;
}

bool frame_precedes(const Frame& u, const Frame& v) {
  if (u.first && u.initial != v.initial) return true;
  if (v.last && u.initial != v.initial) return true;
  return u.intermediate() && v.intermediate() && u.terminal <= v.initial;
}

}  // namespace

std::vector<Frame> collect_frames(const Word& x) {
  auto runs = b_runs(x.view());
  if (runs.empty()) return {};
  auto pm = prefix_max_run(x.view());
  std::vector<Frame> frames;
  auto first = scan_first(x.view(), runs);
  auto last = scan_last(x.view(), runs, pm);
  if (first && last && first->begin == last->begin && first->end == last->end) {
    first->last = true;  // single frame, both ends of the ladder
    frames.push_back(*first);
  } else {
    if (first) frames.push_back(*first);
    auto ints = scan_intermediate(x.view(), runs, pm);
    frames.insert(frames.end(), ints.begin(), ints.end());
    if (last) frames.push_back(*last);
    std::sort(frames.begin(), frames.end(),
              [](const Frame& a, const Frame& b) { return a.begin < b.begin; });
  }
  return frames;
}

std::optional<ParsedCode> parse_frames(const Word& x) {
  auto frames = collect_frames(x);
  if (frames.empty()) return std::nullopt;
  const Frame* last = nullptr;
  bool has_first = false;
  for (const Frame& f : frames) {
    if (f.first) has_first = true;
    if (f.last) last = &f;
  }
  if (!has_first || !last) return std::nullopt;
  if (last->initial.length() < max_run(x)) return std::nullopt;
  // the marker <-> member correspondence must be one to one
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t j = i + 1; j < frames.size(); ++j) {
      if (frames[i].payload == frames[j].payload && frames[i].initial != frames[j].initial)
        return std::nullopt;
      if (frames[i].initial == frames[j].initial && frames[i].payload != frames[j].payload)
        return std::nullopt;
    }
  return ParsedCode{last->initial, std::move(frames)};
}

bool is_set(const Word& x) {
  return x.view() == "aa" || parse_frames(x).has_value();
}

WordSet members(const Word& x) {
  if (x.view() == "aa") return {};
  auto parsed = parse_frames(x);
  if (!parsed) throw code_error("not a set code: " + x.text());
  WordSet out;
  for (const Frame& f : parsed->frames) out.insert(f.payload);
  return out;
}

bool member(const Word& y, const Word& x) {
  if (x.view() == "aa") return false;
  auto parsed = parse_frames(x);
  if (!parsed) return false;
  for (const Frame& f : parsed->frames)
    if (f.payload == y) return true;
  return false;
}

CodeClass classify(const Word& x) {
  CodeClass cc;
  auto parsed = parse_frames(x);
  cc.is_set = x.view() == "aa" || parsed.has_value();
  if (parsed) cc.envelope = parsed->envelope;

  auto frames = collect_frames(x);
  cc.is_lex = true;
  for (const Frame& u : frames)
    for (const Frame& v : frames)
      if (frame_precedes(u, v) && !mlex_less(u.payload, v.payload)) cc.is_lex = false;

  if (cc.is_set) {
    // every inner occurrence of the digit a must lie in some framed a v a
    cc.is_min = true;
    for (std::size_t p = 1; p + 1 < x.size(); ++p) {
      if (x.at(p) != 'a') continue;
      bool covered = false;
      for (const Frame& f : frames) {
        std::size_t from = f.begin + f.initial.length();
        std::size_t to = f.end - f.terminal.length();
        if (p >= from && p < to) covered = true;
      }
      if (!covered) {
        cc.is_min = false;
        break;
      }
    }

    cc.is_special = true;
    for (const Frame& v : frames) {
      std::size_t bound = max_run(v.payload);
      for (const Frame& u : frames)
        if (frame_precedes(u, v)) bound = std::max(bound, u.initial.length());
      if (v.initial.length() != bound + 1) cc.is_special = false;
    }
  }

  cc.is_canonical = cc.is_set && cc.is_min && cc.is_lex && cc.is_special;
  return cc;
}

Word canonical_encode(const WordSet& members) {
  if (members.empty()) return Word("aa");
  std::vector<Word> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Word& u, const Word& v) { return mlex_less(u, v); });
  std::string code;
  std::size_t marker = 0;
  for (const Word& w : sorted) {
    marker = std::max(marker + 1, max_run(w) + 1);
    code.append(marker, 'b');
    code.push_back('a');
    code.append(w.text());
    code.push_back('a');
  }
  code.append(marker, 'b');
  return Word(code);
}

Word adjoin(const Word& x, const Word& y) {
  if (!classify(x).is_canonical)
    throw code_error("adjoin requires a canonical set code, got: " + x.text());
  WordSet s = members(x);
  s.insert(y);
  return canonical_encode(s);
}

bool same_members(const Word& x, const Word& y) {
  if (!is_set(x) || !is_set(y)) return false;
  return members(x) == members(y);
}

Word quine_encode(const std::vector<Word>& items) {
  if (items.empty()) throw code_error("quine_encode: empty list");
  std::size_t marker = 1;
  for (const Word& w : items) marker = std::max(marker, max_run(w) + 1);
  std::string tally(marker, 'b');
  std::string code = tally;
  for (const Word& w : items) {
    code.push_back('a');
    code.append(w.text());
    code.push_back('a');
    code.append(tally);
  }
  return Word(code);
}

bool quine_member(const Word& x, const Word& w) {
  // candidate separators are the tallies occurring in w that dominate all others
  for (std::size_t len = 1; len <= max_run(w); ++len) {
    Word t = Tally(len).word();
    if (!subpart(t, w)) continue;
    if (max_run(w) > len) continue;  // some longer tally occurs
    if (subpart(t, x)) continue;
    Word probe = concat(concat(concat(concat(t, Word("a")), x), Word("a")), t);
    if (subpart(probe, w)) return true;
  }
  return false;
}

WordSet parse_set_literal(const std::string& text) {
  auto fail = [&]() -> code_error { return code_error("malformed set literal: " + text); };
  std::size_t i = 0, n = text.size();
  auto skip = [&]() { while (i < n && text[i] == ' ') ++i; };
  skip();
  if (i >= n || text[i] != '{') throw fail();
  ++i;
  WordSet out;
  skip();
  if (i < n && text[i] == '}') {
    ++i;
    skip();
    if (i != n) throw fail();
    return out;
  }
  while (true) {
    skip();
    std::size_t start = i;
    while (i < n && (text[i] == 'a' || text[i] == 'b')) ++i;
    if (i == start) throw fail();
    out.insert(Word(text.substr(start, i - start)));
    skip();
    if (i < n && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < n && text[i] == '}') {
      ++i;
      skip();
      if (i != n) throw fail();
      return out;
    }
    throw fail();
  }
}

std::string format_set(const WordSet& s) {
  std::vector<Word> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Word& u, const Word& v) { return mlex_less(u, v); });
  std::string out = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out.push_back(',');
    out.append(sorted[i].text());
  }
  out.push_back('}');
  return out;
}

}  // namespace wordsets
