#pragma once

// Substitution engine for the three alphabets:
//   A3 = {a, b, c}                      letters 0..2
//   A9 = {1, ..., 9}                    letters 0..8 (letter i stored as i - 1)
//   A6 = {a-, a+, b-, b+, c-, c+}       letters 0..5 in that order

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ariet/gasket.hpp"

namespace ariet {

enum class Alphabet : std::uint8_t { A3, A6, A9 };

using Letter = std::uint8_t;

std::size_t alphabet_size(Alphabet alphabet);
std::string_view alphabet_name(Alphabet alphabet);
Alphabet parse_alphabet(std::string_view name);

// Index of the A9 letter i (1..9).
constexpr Letter nine(int i) { return static_cast<Letter>(i - 1); }

struct Word {
  Alphabet alphabet = Alphabet::A3;
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
};

// A3 "abac", A9 "4618", A6 "a+,b+,a-,c-".
std::string to_string(const Word& w);
Word parse_word(std::string_view text, Alphabet alphabet);

struct Substitution {
  Alphabet alphabet = Alphabet::A3;
  std::vector<std::vector<Letter>> images;

  Word apply(const Word& w) const;
};

Substitution sigma3(DirectingSymbol s);
Substitution sigma9(DirectingSymbol s);

inline constexpr std::size_t kDefaultWordCap = 10'000'000;

// Words sigma_{r_1} ... sigma_{r_K}(x) for every letter x, K = |prefix|.
// Throws Overflow once the total letter count would exceed `max_total_letters`.
std::vector<Word> stage_words(const DirectingPrefix& prefix, Alphabet alphabet,
                              std::size_t max_total_letters = kDefaultWordCap);

struct HeightVector {
  Integer a;
  Integer b;
  Integer c;

  // Entry for A9 letter index 0..8: letters 1-4 -> a, 5-7 -> b, 8-9 -> c.
  const Integer& nine_entry(Letter letter) const;
  bool operator==(const HeightVector&) const = default;
};

// Heights at stages 0..K from the incidence recurrences alone.
std::vector<HeightVector> heights_by_matrix(const DirectingPrefix& prefix);

// Heights at the multiplicative times m_0..m_n straight from the blocks,
// without expanding III runs (entries for huge k stay cheap).
std::vector<HeightVector> multiplicative_heights(const PartialQuotients& pq);

// Words at the multiplicative time m_n built by the I_m / II_m block rules.
std::vector<Word> multiplicative_stage_words(const PartialQuotients& pq, Alphabet alphabet,
                                             std::size_t n,
                                             std::size_t max_total_letters = kDefaultWordCap);

// Letter-to-letter images of an A9 word: phi onto A3, phi_6 onto A6.
// An A6 word projects onto A3 through phi_3.
Word project(const Word& w, Alphabet target);

// Number of distinct length-n factors occurring in the given words.
std::size_t factor_complexity(std::span<const Word> words, std::size_t n);

// Complexity of the A3 language directed by `prefix` (any continuation),
// read from the images of the two-letter factors at the last stage. Empty
// when n exceeds the shortest stage word + 1, or when the previous stage,
// where it is long enough, disagrees.
std::optional<std::size_t> stabilized_complexity(const DirectingPrefix& prefix, std::size_t n,
                                                 std::size_t max_total_letters = kDefaultWordCap);

// Least N <= max_n such that the word i_n occurs in every j_N, j = 1..9.
// `prefix` must cover max_n symbols.
std::optional<std::size_t> occurrence_horizon(const DirectingPrefix& prefix, Letter i,
                                              std::size_t n, std::size_t max_n,
                                              std::size_t max_total_letters = kDefaultWordCap);

bool occurs_in(const Word& needle, const Word& haystack);

}  // namespace ariet
