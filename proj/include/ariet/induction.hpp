#pragma once

// First-return renormalization of an AR9 map on J_a = I1 u I2 u I3 u I4.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ariet/gasket.hpp"
#include "ariet/iet.hpp"
#include "ariet/words.hpp"

namespace ariet {

inline constexpr std::size_t kDefaultReturnTimeCap = 8;

struct InductionStage {
  std::size_t k = 0;
  Ar9Map map;                      // T_k, restricted to J_{a,k-1}
  DirectingSymbol symbol = DirectingSymbol::I;
  OrderTag predicted;              // from the transition table
  std::array<std::size_t, 9> return_time{};
  std::array<Word, 9> return_word; // stage-(k-1) letters visited before returning
};

OrderTag predicted_order(OrderTag o, DirectingSymbol s);

// Throws NotInGasket, ReturnTimeCapExceeded, or StructureViolation if the
// first-return map cannot be read as an AR9 exchange in any of the six orders.
InductionStage induce_step(const Ar9Map& m, std::size_t cap = kDefaultReturnTimeCap);

struct InductionReport {
  bool triple_matches = false;   // induced triple == ar_step(triple)
  bool order_matches = false;    // fitted order == predicted_order
  bool lengths_match = false;    // piece lengths per the AR9 definition
  bool images_match = false;     // image table of the fitted layout reproduced exactly
  bool words_match = false;      // return words == sigma'_r(i)
  std::string detail;            // first failure, if any

  bool pass() const {
    return triple_matches && order_matches && lengths_match && images_match && words_match;
  }
};

// Recomputes the first return independently of the fit inside induce_step.
InductionReport verify_induction(const Ar9Map& m, std::size_t cap = kDefaultReturnTimeCap);

// Stages 1..K. NotInGasket carries the failing step index.
std::vector<InductionStage> iterate_induction(const Ar9Map& m, std::size_t K,
                                              std::size_t cap = kDefaultReturnTimeCap);

}  // namespace ariet
