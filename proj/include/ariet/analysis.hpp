#pragma once

// Finite-prefix probes of the ergodic criteria. Every flag below is evidence
// read off a finite prefix, never a verdict about the infinite sequence.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ariet/gasket.hpp"
#include "ariet/iet.hpp"
#include "ariet/interval.hpp"
#include "ariet/words.hpp"

namespace ariet {

struct Thresholds {
  Rational xi_sum{1};                 // sum of xi needed for mtours evidence
  Rational xi_trend_fraction{1, 4};   // share of that sum the second half must carry
  Rational nue_tail{1, 10};           // tail of 1/k over the second half must stay below
  std::size_t eigen_recurrences = 3;  // exceedances needed to reject a candidate eigenvalue
};

// ---- xi series -----------------------------------------------------------

struct XiTerm {
  std::size_t n = 0;     // xi_n, n >= 0
  int branch = 1;        // 1: I_m with k_{n+1} >= 2; 2: otherwise
  std::size_t l = 0;     // branch 2: the next I_m rule is the (n+l)-th
  Rational value;
};

// Terms whose lookahead lies inside the prefix, in increasing n.
std::vector<XiTerm> xi_sequence(const PartialQuotients& pq);

// Sum of 1/k over a range, kept as an unreduced fraction p/q so that very
// long sums stay cheap (binary splitting).
struct Fraction {
  Integer p;
  Integer q;
  Rational reduced() const;
  bool at_most(const Rational& bound) const { return p * bound.get_den() <= bound.get_num() * q; }
  double approx() const;
};

Fraction reciprocal_sum(std::span<const std::uint64_t> ks);

struct TwmReport {
  std::vector<std::size_t> n_i;              // n >= 1 with rule n = I_m
  std::vector<std::uint64_t> k_after2;       // k_{n_i+2}, where available
  std::uint64_t max_first_half = 0;          // max of k_after2 over its first half
  std::uint64_t max_second_half = 0;
  bool bounded_evidence = true;              // no growth in the second half
  Rational inv_k_after1_sum;                 // sum 1/k_{n_i+1}
  Rational inv_k_at_sum;                     // sum 1/k_{n_i}
  Rational inv_k_after1_tail;                // second-half parts of those sums
  Rational inv_k_at_tail;
  bool pattern = false;                      // all three bullets look satisfied
};

TwmReport twm_pattern(const PartialQuotients& pq, const Thresholds& th = {});

struct ConditionReport {
  std::vector<XiTerm> xi;
  std::vector<Rational> xi_partial;          // running sums of xi
  Rational inv_k_sum;                        // sum 1/k_n over the prefix
  Rational inv_k_tail;                       // its second-half part
  bool mtours_evidence = false;
  bool nue_evidence = false;
  bool bqp_bound = false;                    // some xi >= 1/(9 K0^2), K0 = max k
  TwmReport twm;
};

ConditionReport condition_report(const PartialQuotients& pq, const Thresholds& th = {});

struct TourabPatterns {
  std::vector<std::size_t> pattern_i;   // s: rule s+2 is I_m with k_{s+2} = 1
  std::vector<std::size_t> pattern_ii;  // s: rule s+2 is I_m, rule s+1 is II_m with k_{s+1} = 1
};

TourabPatterns tourab_patterns(const PartialQuotients& pq);

// ---- eigenvalue necessary condition --------------------------------------

struct EigenScan {
  Rational theta;
  std::vector<Rational> values;          // k_{n+1} * ||h_{a,m_n} theta||, n = 0..N-1
  Rational floor;                        // 1/(2q), theta = p/q
  std::vector<std::size_t> exceedances;  // n with values[n] >= floor
  std::optional<std::size_t> rejected_at;
  bool survives() const { return !rejected_at; }
};

EigenScan eigenvalue_scan(const PartialQuotients& pq, const Rational& theta, const Thresholds& th = {});

// ---- frequencies -----------------------------------------------------------

struct FrequencyVector {
  Rational start;
  std::size_t length = 0;
  std::array<std::uint64_t, 9> counts{};

  Rational frequency(Letter i) const;
  Rational total() const;  // exactly 1 for length > 0
};

FrequencyVector birkhoff_frequencies(const Ar9Map& m, const Rational& x, std::size_t n);

Rational l1_distance(const FrequencyVector& u, const FrequencyVector& v);

struct TwoMeasureResult {
  std::size_t depth = 0;
  std::size_t parity_l = 0;              // I_m rules among the first blocks reaching depth
  Letter first_tower = 0;                // 1-bar and 4-bar as A9 letters
  Letter second_tower = 3;
  FrequencyVector first;
  FrequencyVector second;
  Rational distance;
};

// `stage_map` is the induced map at stage `depth` (multiplicative time m_N),
// `m0` the stage-0 map. Orbits run under m0.
TwoMeasureResult two_measure_experiment(const Ar9Map& m0, const Ar9Map& stage_map, std::size_t depth,
                                        std::size_t rules_i_count, std::size_t n);

// ---- preimage clusters ------------------------------------------------------

struct PreimageReport {
  std::size_t depth = 0;
  std::size_t clusters = 0;
  IntervalSet witness;                    // points whose A3 coding starts with the target
  std::vector<std::size_t> counts_by_length;  // clusters for every prefix of the target
};

// Throws NotAFactor if no point of the map has that coding.
PreimageReport preimage_clusters(const Ar9Map& m, const Word& target);

}  // namespace ariet
