#pragma once

// Length-vector renormalization on the Rauzy gasket: the subtract-and-reorder
// step, directing sequences, partial quotients and exact reconstruction.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ariet/rational.hpp"

namespace ariet {

struct Triple {
  Rational a;
  Rational b;
  Rational c;

  // a > b > c > 0, strictly.
  bool admissible() const { return a > b && b > c && c > 0; }
  bool operator==(const Triple&) const = default;
};

Triple default_seed();

enum class DirectingSymbol : std::uint8_t { I = 1, II = 2, III = 3 };

using DirectingPrefix = std::vector<DirectingSymbol>;

enum class MultiplicativeRule : std::uint8_t { Im, IIm };

struct PartialQuotients {
  std::vector<std::uint64_t> ks;           // k_1, k_2, ...
  std::vector<MultiplicativeRule> rules;   // rule n+1 closes block n+1
  std::vector<std::uint64_t> times;        // m_0 = 0, m_n = k_1 + ... + k_n

  std::size_t size() const { return ks.size(); }
  // 1-based accessors matching the usual k_n / n-th rule indexing.
  std::uint64_t k(std::size_t n) const { return ks.at(n - 1); }
  MultiplicativeRule rule(std::size_t n) const { return rules.at(n - 1); }
};

struct StepResult {
  Triple next;
  DirectingSymbol symbol;
};

// One renormalization step. Throws Inadmissible for a non-admissible input
// and NotInGasket (at_step = 1) when a - b - c <= 0 or ties with b or c.
StepResult ar_step(const Triple& t);

struct GasketRun {
  enum class Exit { Exhausted, NotInGasket };
  DirectingPrefix prefix;
  std::vector<Triple> triples;  // triples[0] = input, triples[j] after j steps
  Exit exit = Exit::Exhausted;
  std::size_t exit_step = 0;    // step at which the point left the gasket
  std::string exit_reason;
};

inline constexpr std::size_t kDefaultMaxSteps = 64;
inline constexpr std::size_t kReconstructionCap = 10000;

GasketRun directing_prefix(const Triple& t, std::size_t max_steps = kDefaultMaxSteps);

// Inverts the step for r_K, ..., r_1 starting from `seed`.
Triple reconstruct_triple(const DirectingPrefix& prefix, const Triple& seed = default_seed());

PartialQuotients partial_quotients(const DirectingPrefix& prefix);

// Builds a PartialQuotients (times included) from blocks; k_i >= 1.
PartialQuotients make_partial_quotients(std::vector<std::uint64_t> ks,
                                        std::vector<MultiplicativeRule> rules);

// III^{k_i - 1} followed by the rule symbol, for every block.
DirectingPrefix expand(const PartialQuotients& pq);

// Lengths of the three line intervals: (a+b, b+c, a+c).
std::array<Rational, 3> omega_lengths(const Triple& t);

// "1", "2", "3" for I, II, III.
std::string to_digits(const DirectingPrefix& prefix);
DirectingPrefix parse_prefix(std::string_view digits);
std::string_view symbol_name(DirectingSymbol s);

Triple parse_triple(std::string_view text);  // "a,b,c" with p/q entries
std::array<std::string, 3> to_strings(const Triple& t);

}  // namespace ariet
