#pragma once

// Plain-text run configuration: key=value lines, '#' starts a comment.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>

#include "ariet/analysis.hpp"
#include "ariet/gasket.hpp"

namespace ariet {

struct RunConfig {
  Triple seed_triple = default_seed();
  std::size_t max_steps = kDefaultMaxSteps;
  std::size_t word_cap = kDefaultWordCap;
  std::size_t return_time_cap = 8;
  std::size_t refinement_depth = 500;   // longest preimage target
  std::size_t orbit_length = 10000;
  Rational l1_threshold{1, 10};
  Rational control_l1_threshold{1, 50};
  Rational xi_sum_threshold{1};
  Rational xi_trend_fraction{1, 4};
  Rational nue_tail_threshold{1, 10};
  std::size_t eigen_recurrences = 3;
  std::string output_dir = ".";
  std::uint64_t random_seed = 1;

  Thresholds thresholds() const;
};

// Throws ParseError on malformed lines, unknown keys, or non-positive caps.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);

// Canonical key=value text (keys sorted), round-trips through parse_config.
std::string to_config_text(const RunConfig& config);

}  // namespace ariet
