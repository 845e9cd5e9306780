#pragma once

// Shared helpers for the test binaries: deterministic sampling and a few
// hand-written oracles that do not go through the library code paths.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ariet/gasket.hpp"
#include "ariet/iet.hpp"
#include "ariet/rational.hpp"

namespace testing_support {

using namespace ariet;

inline Rational unit_fraction(std::mt19937_64& rng) {
  return make_rational(Integer(static_cast<unsigned long>(rng() >> 33)), Integer(1ul << 31));
}

inline Rational random_point(const Ar9Map& m, std::mt19937_64& rng) {
  return point_at(m, m.space().measure() * unit_fraction(rng));
}

// Random prefix over {I, II, III} ending in I, so it is a complete block list.
inline DirectingPrefix random_prefix(std::mt19937_64& rng, std::size_t length) {
  DirectingPrefix p;
  for (std::size_t i = 0; i < length; ++i) p.push_back(static_cast<DirectingSymbol>(1 + rng() % 3));
  if (!p.empty()) p.back() = DirectingSymbol::I;
  return p;
}

// Substitution tables typed in as strings, one map per symbol.
using StringSub = std::map<char, std::string>;

inline StringSub oracle_sigma3(int r) {
  if (r == 1) return {{'a', "ab"}, {'b', "ac"}, {'c', "a"}};
  if (r == 2) return {{'a', "ab"}, {'b', "a"}, {'c', "ac"}};
  return {{'a', "a"}, {'b', "ab"}, {'c', "ac"}};
}

inline StringSub oracle_sigma9(int r) {
  if (r == 1)
    return {{'1', "35"}, {'2', "45"}, {'3', "46"}, {'4', "17"}, {'5', "18"},
            {'6', "19"}, {'7', "29"}, {'8', "2"},  {'9', "3"}};
  if (r == 2)
    return {{'1', "17"}, {'2', "46"}, {'3', "45"}, {'4', "35"}, {'5', "3"},
            {'6', "2"},  {'7', "1"},  {'8', "19"}, {'9', "18"}};
  return {{'1', "1"},  {'2', "2"},  {'3', "3"},  {'4', "4"}, {'5', "45"},
          {'6', "46"}, {'7', "17"}, {'8', "18"}, {'9', "19"}};
}

inline std::string rewrite(const StringSub& s, const std::string& w) {
  std::string out;
  for (char ch : w) out += s.at(ch);
  return out;
}

// sigma_{r_1} ... sigma_{r_K}(x): apply the innermost symbol first.
inline std::string oracle_word(const std::string& digits, char x, bool nine_letters) {
  std::string w(1, x);
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    w = rewrite(nine_letters ? oracle_sigma9(*it - '0') : oracle_sigma3(*it - '0'), w);
  return w;
}

inline char oracle_phi(char nine) {
  if (nine <= '4') return 'a';
  if (nine <= '7') return 'b';
  return 'c';
}

inline std::vector<Triple> sample_triples(std::mt19937_64& rng, std::size_t count, std::size_t length) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(reconstruct_triple(random_prefix(rng, length)));
  return out;
}

}  // namespace testing_support
