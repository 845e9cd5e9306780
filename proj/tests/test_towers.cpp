#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ariet/towers.hpp"
#include "support.hpp"

using namespace ariet;
using namespace testing_support;

namespace {

const Triple k742{Rational(7), Rational(4), Rational(2)};

Rational tower_mass(const TowerFamily& f) {
  Rational total = 0;
  for (const Tower& t : f.nine) total += t.base().measure() * static_cast<long>(t.height());
  return total;
}

}  // namespace

TEST_CASE("stage zero") {
  const Ar9Map m = build_ar9(k742, {});
  const TowerFamily f = towers_at_stage(m, {}, 0);
  for (Letter i = 0; i < 9; ++i) {
    CHECK(f.nine[i].height() == 1);
    CHECK(f.nine[i].base() == IntervalSet{m.piece(i)});
  }
  CHECK(partition_check(f).pass);
  CHECK(adjacency_check(f).pass);
  const ComponentCounts cc = level_component_counts(f);
  CHECK(cc.a == 1);  // [6,11) u [11,13) u [13,17) u [17,20) merges to [6,20)
  CHECK(cc.b == 2);  // [20,24) u [24,26) u [0,2)
  CHECK(cc.c == 1);
  CHECK(f.three[0].base() == IntervalSet{Interval{Rational(6), Rational(20)}});
}

TEST_CASE("first stage on a tribonacci map") {
  const DirectingPrefix p(8, DirectingSymbol::I);
  const Ar9Map m = build_ar9(reconstruct_triple(p), {});
  const auto stages = iterate_induction(m, 8);
  const TowerFamily f = towers_at_stage(m, stages, 1);
  CHECK(f.nine[0].height() == 2);
  CHECK(to_string(f.codings[0]) == "35");
  const Triple& t = m.triple();
  for (std::size_t k = 0; k <= 8; ++k) CHECK(tower_mass(towers_at_stage(m, stages, k)) == 2 * (t.a + t.b + t.c));
}

TEST_CASE("negative controls") {
  const Ar9Map m = build_ar9(reconstruct_triple(parse_prefix("1213")), {});
  const auto stages = iterate_induction(m, 3);
  TowerFamily f = towers_at_stage(m, stages, 3);
  REQUIRE(partition_check(f).pass);
  REQUIRE(adjacency_check(f).pass);

  TowerFamily shifted = f;
  shifted.nine[4].levels.back() = shifted.nine[4].levels.back().translated(Rational(1, 1000));
  CHECK_FALSE(partition_check(shifted).pass);

  TowerFamily dropped = f;
  dropped.nine[0].levels.pop_back();
  CHECK_FALSE(partition_check(dropped).pass);

  TowerFamily flipped = f;
  flipped.order.reversed = !flipped.order.reversed;
  CHECK_FALSE(adjacency_check(flipped).pass);
}

TEST_CASE("heights, codings and addresses") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 5; ++trial) {
    const DirectingPrefix p = random_prefix(rng, 8);
    const Ar9Map m = build_ar9(reconstruct_triple(p), all_orders()[trial]);
    const auto stages = iterate_induction(m, 8);
    const auto h = heights_by_matrix(p);
    for (std::size_t k = 0; k <= 8; ++k) {
      const TowerFamily f = towers_at_stage(m, stages, k);
      const std::string digits = to_digits(DirectingPrefix(p.begin(), p.begin() + static_cast<long>(k)));
      for (Letter i = 0; i < 9; ++i) {
        CHECK(h[k].nine_entry(i) == f.nine[i].height());
        CHECK(to_string(f.codings[i]) == oracle_word(digits, "123456789"[i], true));
      }
      for (int s = 0; s < 5; ++s) {
        const Rational x = random_point(m, rng);
        const TowerAddress a = tower_address(m, stages, k, x);
        CHECK(f.nine[a.tower].levels.at(a.level).contains(x));
      }
    }
  }
}

TEST_CASE("addresses separate points") {
  std::mt19937_64 rng(53);
  const Ar9Map m = build_ar9(reconstruct_triple(random_prefix(rng, 8)), {});
  const auto stages = iterate_induction(m, 8);
  std::vector<Rational> xs;
  for (int s = 0; s < 20; ++s) xs.push_back(random_point(m, rng));
  std::vector<std::vector<std::pair<int, std::size_t>>> seq(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (std::size_t k = 0; k <= 8; ++k) {
      const TowerAddress a = tower_address(m, stages, k, xs[j]);
      seq[j].emplace_back(a.tower, a.level);
    }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] != xs[j]) CHECK(seq[i] != seq[j]);
}

TEST_CASE("structure sweep over orders and gaps") {
  std::mt19937_64 rng(57);
  for (const Triple& t : sample_triples(rng, 5, 10))
    for (OrderTag o : all_orders())
      for (auto gaps : {std::pair{Rational(0), Rational(0)}, std::pair{Rational(1, 7), Rational(3)}}) {
        const Ar9Map m = build_ar9(t, o, gaps);
        const auto stages = iterate_induction(m, 8);
        for (std::size_t k = 0; k <= 8; ++k) {
          const TowerFamily f = towers_at_stage(m, stages, k);
          INFO(to_string(o), " k=", k);
          CHECK(partition_check(f).pass);
          CHECK(adjacency_check(f).pass);
          CHECK(level_component_counts(f).within_bounds());
        }
      }
}
