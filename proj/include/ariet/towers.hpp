#pragma once

// Rokhlin towers over the stage-k pieces, pushed forward under the stage-0 map.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ariet/induction.hpp"
#include "ariet/interval.hpp"

namespace ariet {

struct Tower {
  Letter label = 0;               // A9 letter, or A3 letter for the derived towers
  std::size_t stage = 0;
  std::vector<IntervalSet> levels;  // levels[j] = T^j(base)

  const IntervalSet& base() const { return levels.front(); }
  std::size_t height() const { return levels.size(); }
};

struct TowerFamily {
  std::size_t stage = 0;
  OrderTag order;                 // order of the stage-k map
  IntervalSet space;              // X9
  std::array<Tower, 9> nine;
  std::array<Tower, 3> three;     // tau_a, tau_b, tau_c
  std::array<Word, 9> codings;    // stage-0 letters read up each A9 tower
};

// `stages` as returned by iterate_induction on `m0`; k <= stages.size().
// Throws StructureViolation if a level straddles a stage-0 piece.
TowerFamily towers_at_stage(const Ar9Map& m0, const std::vector<InductionStage>& stages, std::size_t k);

struct TowerAddress {
  Letter tower;       // A9 letter
  std::size_t level;
};

// Tower and level of x at stage k, found by walking back to the stage-k domain.
TowerAddress tower_address(const Ar9Map& m0, const std::vector<InductionStage>& stages, std::size_t k,
                           const Rational& x);

// Preimage under the stage-0 map. Throws OutOfDomain.
Rational ar9_inverse(const Ar9Map& m, const Rational& y);

struct CheckReport {
  bool pass = true;
  std::string detail;  // first failure
  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

CheckReport partition_check(const TowerFamily& f);
CheckReport adjacency_check(const TowerFamily& f);

struct ComponentCounts {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  bool within_bounds() const { return a <= 3 && b <= 2 && c <= 1; }
};

// Maximum number of connected components over the levels of tau_a, tau_b, tau_c.
ComponentCounts level_component_counts(const TowerFamily& f);

}  // namespace ariet
