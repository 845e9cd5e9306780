#pragma once

// Standalone SVG drawings: upper row domain pieces, lower row images,
// dashed outlines for the induction set. Endpoints are also attached as exact
// "p/q" data attributes so the pictures can be checked mechanically.

#include <string>

#include "ariet/iet.hpp"
#include "ariet/induction.hpp"
#include "ariet/towers.hpp"

namespace ariet {

inline constexpr const char* kSvgVersionComment = "<!-- ar-iet 1.0.0 -->";

std::string svg_layout(const Ar9Map& m);
std::string svg_induction(const Ar9Map& m, const InductionStage& stage);
std::string svg_towers(const TowerFamily& f);
std::string svg_circle(const Ar6Map& m);

}  // namespace ariet
