#include "ariet/towers.hpp"

#include <algorithm>

#include "ariet/error.hpp"

namespace ariet {

namespace {

Letter group_of(Letter i) { return i < 4 ? 0 : (i < 7 ? 1 : 2); }

}  // namespace

TowerFamily towers_at_stage(const Ar9Map& m0, const std::vector<InductionStage>& stages, std::size_t k) {
  if (k > stages.size())
    throw OutOfDomain("stage " + std::to_string(k) + " not computed (have " + std::to_string(stages.size()) + ")");
  const Ar9Map& mk = k == 0 ? m0 : stages[k - 1].map;
  TowerFamily f;
  f.stage = k;
  f.order = mk.order();
  f.space = m0.space();
  const IntervalSet roof = k == 0 ? IntervalSet{} : mk.space();

  for (Letter i = 0; i < 9; ++i) {
    Tower& tower = f.nine[i];
    tower.label = i;
    tower.stage = k;
    Word& coding = f.codings[i];
    coding.alphabet = Alphabet::A9;
    Interval level = mk.piece(i);
    // Climb until the orbit of the base re-enters the stage-k domain J_{a,k-1}.
    while (true) {
      tower.levels.push_back(IntervalSet{level});
      auto letter = m0.piece_of(level.lo);
      if (!letter || !m0.piece(*letter).contains(level))
        throw StructureViolation("level " + to_string(level) + " of tower " + std::to_string(i + 1) +
                                 " straddles a stage-0 piece");
      coding.letters.push_back(*letter);
      level = level.translated(m0.offset(*letter));
      if (k == 0 || roof.intersect(level).measure() == level.length()) break;
      if (roof.intersect(level).measure() != 0)
        throw StructureViolation("level " + to_string(level) + " partly inside the stage domain");
    }
  }

  for (Letter g = 0; g < 3; ++g) {
    Tower& tower = f.three[g];
    tower.label = g;
    tower.stage = k;
    std::size_t h = 0;
    for (Letter i = 0; i < 9; ++i)
      if (group_of(i) == g) h = std::max(h, f.nine[i].height());
    tower.levels.assign(h, IntervalSet{});
    for (Letter i = 0; i < 9; ++i) {
      if (group_of(i) != g) continue;
      if (f.nine[i].height() != h)
        throw StructureViolation("towers of one A3 letter have different heights at stage " + std::to_string(k));
      for (std::size_t j = 0; j < h; ++j) tower.levels[j] = tower.levels[j].unite(f.nine[i].levels[j]);
    }
  }
  return f;
}

Rational ar9_inverse(const Ar9Map& m, const Rational& y) {
  for (Letter i = 0; i < 9; ++i)
    if (m.image(i).contains(y)) return y - m.offset(i);
  throw OutOfDomain("point " + to_exact_string(y) + " is not in the image");
}

TowerAddress tower_address(const Ar9Map& m0, const std::vector<InductionStage>& stages, std::size_t k,
                           const Rational& x) {
  if (k > stages.size()) throw OutOfDomain("stage " + std::to_string(k) + " not computed");
  const Ar9Map& mk = k == 0 ? m0 : stages[k - 1].map;
  Rational y = x;
  std::size_t level = 0;
  while (!mk.piece_of(y)) {
    y = ar9_inverse(m0, y);
    ++level;
  }
  return {*mk.piece_of(y), level};
}

CheckReport partition_check(const TowerFamily& f) {
  CheckReport report;
  std::vector<Interval> all;
  for (const Tower& t : f.nine) {
    const Rational base = t.base().measure();
    for (std::size_t j = 0; j < t.height(); ++j) {
      if (t.levels[j].measure() != base)
        report.fail("tower " + std::to_string(t.label + 1) + " level " + std::to_string(j) + " changes measure");
      for (const Interval& iv : t.levels[j].parts()) all.push_back(iv);
    }
  }
  std::sort(all.begin(), all.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i].lo < all[i - 1].hi) {
      report.fail("levels overlap at " + to_string(all[i]));
      break;
    }
  if (IntervalSet(all) != f.space) report.fail("levels do not cover X9");
  return report;
}

CheckReport adjacency_check(const TowerFamily& f) {
  CheckReport report;
  const std::array<std::pair<int, int>, 3> pairs{{{2, 3}, {5, 6}, {8, 9}}};
  for (auto [lower, upper] : pairs) {
    const Tower& left = f.nine[nine(f.order.reversed ? upper : lower)];
    const Tower& right = f.nine[nine(f.order.reversed ? lower : upper)];
    if (left.height() != right.height()) {
      report.fail("towers " + std::to_string(lower) + "," + std::to_string(upper) + " differ in height");
      continue;
    }
    for (std::size_t j = 0; j < left.height(); ++j) {
      const auto& l = left.levels[j].parts();
      const auto& r = right.levels[j].parts();
      if (l.size() != 1 || r.size() != 1 || l.front().hi != r.front().lo) {
        report.fail("levels " + std::to_string(j) + " of towers " + std::to_string(lower) + "," +
                    std::to_string(upper) + " are not adjacent on the expected side");
        break;
      }
    }
  }
  return report;
}

ComponentCounts level_component_counts(const TowerFamily& f) {
  std::array<std::size_t, 3> worst{};
  for (Letter g = 0; g < 3; ++g)
    for (const IntervalSet& level : f.three[g].levels) worst[g] = std::max(worst[g], level.components());
  return {worst[0], worst[1], worst[2]};
}

}  // namespace ariet
