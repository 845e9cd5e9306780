#include "ariet/words.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "ariet/error.hpp"

namespace ariet {
namespace {

constexpr std::array<std::string_view, 6> kSixNames = {"a-", "a+", "b-", "b+", "c-", "c+"};

// phi: 1-4 -> a, 5-7 -> b, 8-9 -> c.
constexpr std::array<Letter, 9> kPhi = {0, 0, 0, 0, 1, 1, 1, 2, 2};
// phi_6: 1,2 -> a-; 3,4 -> a+; 5 -> b-; 6,7 -> b+; 8 -> c-; 9 -> c+.
constexpr std::array<Letter, 9> kPhi6 = {0, 0, 1, 1, 2, 3, 3, 4, 5};

std::vector<std::vector<Letter>> nine_table(std::initializer_list<const char*> images) {
  std::vector<std::vector<Letter>> out;
  for (const char* img : images) {
    std::vector<Letter> w;
    for (const char* p = img; *p; ++p) w.push_back(static_cast<Letter>(*p - '1'));
    out.push_back(std::move(w));
  }
  return out;
}

// One segment of a block rule: `letter` repeated k + `shift` times.
struct Segment {
  Letter letter;
  int shift;      // power is k + shift, or exactly 1 when `fixed`
  bool fixed;
};
using BlockRule = std::vector<Segment>;

Segment once(int i) { return {nine(i), 0, true}; }
Segment power(int i, int shift) { return {nine(i), shift, false}; }

const std::array<BlockRule, 9>& nine_block_rules(MultiplicativeRule rule) {
  static const std::array<BlockRule, 9> im = {{
      {once(3), power(4, -1), once(5)},
      {power(4, 0), once(5)},
      {power(4, 0), once(6)},
      {power(1, 0), once(7)},
      {power(1, 0), once(8)},
      {power(1, 0), once(9)},
      {once(2), power(1, -1), once(9)},
      {once(2)},
      {once(3)},
  }};
  static const std::array<BlockRule, 9> iim = {{
      {power(1, 0), once(7)},
      {power(4, 0), once(6)},
      {power(4, 0), once(5)},
      {once(3), power(4, -1), once(5)},
      {once(3)},
      {once(2)},
      {once(1)},
      {power(1, 0), once(9)},
      {power(1, 0), once(8)},
  }};
  return rule == MultiplicativeRule::Im ? im : iim;
}

const std::array<BlockRule, 3>& three_block_rules(MultiplicativeRule rule) {
  // A3 letters a,b,c are indices 0,1,2; reuse Segment with nine() offsets.
  static const std::array<BlockRule, 3> im = {{
      {{0, 0, false}, {1, 0, true}},
      {{0, 0, false}, {2, 0, true}},
      {{0, 0, true}},
  }};
  static const std::array<BlockRule, 3> iim = {{
      {{0, 0, false}, {1, 0, true}},
      {{0, 0, true}},
      {{0, 0, false}, {2, 0, true}},
  }};
  return rule == MultiplicativeRule::Im ? im : iim;
}

template <std::size_t N>
std::vector<Word> apply_block(const std::vector<Word>& old, const std::array<BlockRule, N>& rules,
                              std::uint64_t k, std::size_t cap) {
  std::vector<Word> next(N);
  std::size_t total = 0;
  for (std::size_t x = 0; x < N; ++x) {
    next[x].alphabet = old[x].alphabet;
    for (const Segment& seg : rules[x]) {
      std::uint64_t reps = seg.fixed ? 1 : k + seg.shift;
      const auto& piece = old[seg.letter].letters;
      if (total + reps * piece.size() > cap) {
        throw Overflow("multiplicative stage words exceed " + std::to_string(cap) + " letters");
      }
      total += reps * piece.size();
      for (std::uint64_t r = 0; r < reps; ++r) {
        next[x].letters.insert(next[x].letters.end(), piece.begin(), piece.end());
      }
    }
  }
  return next;
}

std::vector<Word> letters_of(Alphabet alphabet) {
  std::vector<Word> out(alphabet_size(alphabet));
  for (std::size_t x = 0; x < out.size(); ++x) {
    out[x].alphabet = alphabet;
    out[x].letters = {static_cast<Letter>(x)};
  }
  return out;
}

// X_{k+1} is the concatenation of the stage-k words named by sigma_{r_{k+1}}(x).
std::vector<Word> advance(const std::vector<Word>& current, DirectingSymbol s, std::size_t cap) {
  Alphabet alphabet = current.front().alphabet;
  Substitution sub = alphabet == Alphabet::A3 ? sigma3(s) : sigma9(s);
  std::size_t total = 0;
  for (std::size_t x = 0; x < current.size(); ++x) {
    for (Letter y : sub.images[x]) total += current[y].size();
  }
  if (total > cap) throw Overflow("stage words exceed " + std::to_string(cap) + " letters");
  std::vector<Word> next(current.size());
  for (std::size_t x = 0; x < current.size(); ++x) {
    next[x].alphabet = alphabet;
    for (Letter y : sub.images[x]) {
      next[x].letters.insert(next[x].letters.end(), current[y].letters.begin(),
                             current[y].letters.end());
    }
  }
  return next;
}

}  // namespace

std::size_t alphabet_size(Alphabet alphabet) {
  switch (alphabet) {
    case Alphabet::A3: return 3;
    case Alphabet::A6: return 6;
    case Alphabet::A9: return 9;
  }
  return 0;
}

std::string_view alphabet_name(Alphabet alphabet) {
  switch (alphabet) {
    case Alphabet::A3: return "a3";
    case Alphabet::A6: return "a6";
    case Alphabet::A9: return "a9";
  }
  return "?";
}

Alphabet parse_alphabet(std::string_view name) {
  if (name == "a3" || name == "A3") return Alphabet::A3;
  if (name == "a6" || name == "A6") return Alphabet::A6;
  if (name == "a9" || name == "A9") return Alphabet::A9;
  throw ParseError("unknown alphabet '" + std::string(name) + "'");
}

std::string to_string(const Word& w) {
  std::string out;
  switch (w.alphabet) {
    case Alphabet::A3:
      for (Letter l : w.letters) out.push_back(static_cast<char>('a' + l));
      break;
    case Alphabet::A9:
      for (Letter l : w.letters) out.push_back(static_cast<char>('1' + l));
      break;
    case Alphabet::A6:
      for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out.push_back(',');
        out += kSixNames[w.letters[i]];
      }
      break;
  }
  return out;
}

Word parse_word(std::string_view text, Alphabet alphabet) {
  Word w{alphabet, {}};
  if (alphabet == Alphabet::A6) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t comma = text.find(',', start);
      std::string_view tok = text.substr(start, comma == text.npos ? text.npos : comma - start);
      std::size_t idx = 0;
      while (idx < kSixNames.size() && kSixNames[idx] != tok) ++idx;
      if (idx == kSixNames.size()) throw ParseError("unknown A6 letter '" + std::string(tok) + "'");
      w.letters.push_back(static_cast<Letter>(idx));
      if (comma == text.npos) break;
      start = comma + 1;
    }
    return w;
  }
  for (char ch : text) {
    if (alphabet == Alphabet::A3 && ch >= 'a' && ch <= 'c') {
      w.letters.push_back(static_cast<Letter>(ch - 'a'));
    } else if (alphabet == Alphabet::A9 && ch >= '1' && ch <= '9') {
      w.letters.push_back(static_cast<Letter>(ch - '1'));
    } else {
      throw ParseError(std::string("letter '") + ch + "' not in alphabet " +
                       std::string(alphabet_name(alphabet)));
    }
  }
  return w;
}

Word Substitution::apply(const Word& w) const {
  Word out{alphabet, {}};
  for (Letter l : w.letters) {
    const auto& img = images.at(l);
    out.letters.insert(out.letters.end(), img.begin(), img.end());
  }
  return out;
}

Substitution sigma3(DirectingSymbol s) {
  switch (s) {
    case DirectingSymbol::I: return {Alphabet::A3, {{0, 1}, {0, 2}, {0}}};
    case DirectingSymbol::II: return {Alphabet::A3, {{0, 1}, {0}, {0, 2}}};
    case DirectingSymbol::III: return {Alphabet::A3, {{0}, {0, 1}, {0, 2}}};
  }
  return {};
}

Substitution sigma9(DirectingSymbol s) {
  switch (s) {
    case DirectingSymbol::I:
      return {Alphabet::A9, nine_table({"35", "45", "46", "17", "18", "19", "29", "2", "3"})};
    case DirectingSymbol::II:
      return {Alphabet::A9, nine_table({"17", "46", "45", "35", "3", "2", "1", "19", "18"})};
    case DirectingSymbol::III:
      return {Alphabet::A9, nine_table({"1", "2", "3", "4", "45", "46", "17", "18", "19"})};
  }
  return {};
}

std::vector<Word> stage_words(const DirectingPrefix& prefix, Alphabet alphabet,
                              std::size_t max_total_letters) {
  if (alphabet == Alphabet::A6) {
    throw std::invalid_argument("A6 words are produced by projection from A9 only");
  }
  std::vector<Word> current = letters_of(alphabet);
  for (DirectingSymbol s : prefix) current = advance(current, s, max_total_letters);
  return current;
}

const Integer& HeightVector::nine_entry(Letter letter) const {
  if (letter < 4) return a;
  if (letter < 7) return b;
  return c;
}

std::vector<HeightVector> heights_by_matrix(const DirectingPrefix& prefix) {
  std::vector<HeightVector> out;
  out.push_back({1, 1, 1});
  for (DirectingSymbol s : prefix) {
    const HeightVector& h = out.back();
    switch (s) {
      case DirectingSymbol::I: out.push_back({h.a + h.b, h.a + h.c, h.a}); break;
      case DirectingSymbol::II: out.push_back({h.a + h.b, h.a, h.a + h.c}); break;
      case DirectingSymbol::III: out.push_back({h.a, h.a + h.b, h.a + h.c}); break;
    }
  }
  return out;
}

std::vector<HeightVector> multiplicative_heights(const PartialQuotients& pq) {
  std::vector<HeightVector> out;
  out.push_back({1, 1, 1});
  for (std::size_t i = 0; i < pq.ks.size(); ++i) {
    const HeightVector& h = out.back();
    Integer ka = Integer(static_cast<unsigned long>(pq.ks[i])) * h.a;
    if (pq.rules[i] == MultiplicativeRule::Im) {
      out.push_back({ka + h.b, ka + h.c, h.a});
    } else {
      out.push_back({ka + h.b, h.a, ka + h.c});
    }
  }
  return out;
}

std::vector<Word> multiplicative_stage_words(const PartialQuotients& pq, Alphabet alphabet,
                                             std::size_t n, std::size_t max_total_letters) {
  if (n > pq.size()) throw std::out_of_range("n exceeds the number of partial quotients");
  if (alphabet == Alphabet::A6) {
    throw std::invalid_argument("A6 words are produced by projection from A9 only");
  }
  std::vector<Word> current = letters_of(alphabet);
  for (std::size_t i = 0; i < n; ++i) {
    current = alphabet == Alphabet::A3
                  ? apply_block(current, three_block_rules(pq.rules[i]), pq.ks[i], max_total_letters)
                  : apply_block(current, nine_block_rules(pq.rules[i]), pq.ks[i], max_total_letters);
  }
  return current;
}

Word project(const Word& w, Alphabet target) {
  Word out{target, {}};
  out.letters.reserve(w.size());
  if (w.alphabet == Alphabet::A9 && target == Alphabet::A3) {
    for (Letter l : w.letters) out.letters.push_back(kPhi[l]);
  } else if (w.alphabet == Alphabet::A9 && target == Alphabet::A6) {
    for (Letter l : w.letters) out.letters.push_back(kPhi6[l]);
  } else if (w.alphabet == Alphabet::A6 && target == Alphabet::A3) {
    for (Letter l : w.letters) out.letters.push_back(static_cast<Letter>(l / 2));
  } else if (w.alphabet == target) {
    out.letters = w.letters;
  } else {
    throw std::invalid_argument("no projection between these alphabets");
  }
  return out;
}

std::size_t factor_complexity(std::span<const Word> words, std::size_t n) {
  if (n == 0) return 1;
  std::vector<std::string> storage;
  storage.reserve(words.size());
  for (const Word& w : words) storage.emplace_back(w.letters.begin(), w.letters.end());
  std::unordered_set<std::string_view> factors;
  for (const std::string& s : storage) {
    if (s.size() < n) continue;
    std::string_view view(s);
    for (std::size_t i = 0; i + n <= s.size(); ++i) factors.insert(view.substr(i, n));
  }
  return factors.size();
}

namespace {

// Every tail language has exactly the two-letter factors aa, ab, ac, ba, ca,
// so the images of those five words carry every factor of length <= min
// height + 1.
std::vector<Word> two_letter_images(const std::vector<Word>& w) {
  static const std::pair<int, int> pairs[5] = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}};
  std::vector<Word> out;
  for (auto [x, y] : pairs) {
    Word joined = w[x];
    joined.letters.insert(joined.letters.end(), w[y].letters.begin(), w[y].letters.end());
    out.push_back(std::move(joined));
  }
  return out;
}

std::optional<std::size_t> exact_count(const std::vector<Word>& w, std::size_t n) {
  const std::size_t shortest = std::min({w[0].size(), w[1].size(), w[2].size()});
  if (n > shortest + 1) return std::nullopt;
  return factor_complexity(two_letter_images(w), n);
}

}  // namespace

std::optional<std::size_t> stabilized_complexity(const DirectingPrefix& prefix, std::size_t n,
                                                 std::size_t max_total_letters) {
  if (prefix.empty()) return std::nullopt;
  DirectingPrefix shorter(prefix.begin(), prefix.end() - 1);
  auto p1 = exact_count(stage_words(prefix, Alphabet::A3, max_total_letters), n);
  if (!p1) return std::nullopt;
  auto p0 = exact_count(stage_words(shorter, Alphabet::A3, max_total_letters), n);
  if (p0 && *p0 != *p1) return std::nullopt;
  return p1;
}

bool occurs_in(const Word& needle, const Word& haystack) {
  if (needle.size() > haystack.size()) return false;
  if (needle.empty()) return true;
  auto it = std::search(haystack.letters.begin(), haystack.letters.end(), needle.letters.begin(),
                        needle.letters.end());
  return it != haystack.letters.end();
}

std::optional<std::size_t> occurrence_horizon(const DirectingPrefix& prefix, Letter i,
                                              std::size_t n, std::size_t max_n,
                                              std::size_t max_total_letters) {
  if (max_n > prefix.size()) throw std::out_of_range("directing prefix shorter than max_n");
  if (i >= 9) throw std::out_of_range("A9 letter index out of range");
  if (n > max_n) return std::nullopt;
  DirectingPrefix head(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<Word> current = stage_words(head, Alphabet::A9, max_total_letters);
  const Word target = current[i];
  for (std::size_t stage = n;; ++stage) {
    bool everywhere = std::all_of(current.begin(), current.end(),
                                  [&](const Word& w) { return occurs_in(target, w); });
    if (everywhere) return stage;
    if (stage == max_n) return std::nullopt;
    current = advance(current, prefix[stage], max_total_letters);
  }
}

}  // namespace ariet
