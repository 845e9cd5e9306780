// Randomized cross-module properties; every generator is seeded so failures replay.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ariet/analysis.hpp"
#include "ariet/error.hpp"
#include "ariet/towers.hpp"
#include "support.hpp"

using namespace ariet;
using namespace testing_support;

namespace {

Rational small_rational(std::mt19937_64& rng) {
  return make_rational(Integer(static_cast<long>(rng() % 40)), Integer(1 + static_cast<long>(rng() % 9)));
}

}  // namespace

TEST_CASE("maps are bijections that preserve length") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const Triple t = reconstruct_triple(random_prefix(rng, 1 + rng() % 12));
    const OrderTag o = all_orders()[rng() % 6];
    const Ar9Map m = build_ar9(t, o, {small_rational(rng), small_rational(rng)}, small_rational(rng) - 20);
    Rational dom = 0, img = 0;
    for (Letter i = 0; i < 9; ++i) {
      dom += m.piece(i).length();
      img += m.image(i).length();
      for (Letter j = 0; j < i; ++j) {
        CHECK_FALSE(intersect(m.piece(i), m.piece(j)).has_value());
        CHECK_FALSE(intersect(m.image(i), m.image(j)).has_value());
      }
      CHECK(m.space().intersect(m.image(i)).measure() == m.image(i).length());
    }
    CHECK(dom == m.space().measure());
    CHECK(img == dom);
    for (int s = 0; s < 20; ++s) {
      const Rational x = random_point(m, rng);
      const auto [y, letter] = ar9_apply(m, x);
      CHECK(m.piece(letter).contains(x));
      CHECK(m.image(letter).contains(y));
      CHECK(ar9_inverse(m, y) == x);
    }
  }
}

TEST_CASE("induction commutes with the renormalization for 100 triples x 5 steps") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const DirectingPrefix p = random_prefix(rng, 10);
    const Ar9Map m0 = build_ar9(reconstruct_triple(p), all_orders()[trial % 6]);
    const auto stages = iterate_induction(m0, 5);
    const Ar9Map* prev = &m0;
    for (const InductionStage& s : stages) {
      CHECK(s.symbol == p[s.k - 1]);
      CHECK(s.map.triple() == ar_step(prev->triple()).next);
      CHECK(verify_induction(*prev).pass());
      const IntervalSet ja = prev->letter_set(0);
      for (Letter i = 0; i < 9; ++i) CHECK(ja.intersect(s.map.piece(i)).measure() == s.map.piece(i).length());
      prev = &s.map;
    }
  }
}

TEST_CASE("multiplicative words equal additive words") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::uint64_t> ks;
    std::vector<MultiplicativeRule> rules;
    for (std::size_t i = 0; i < n; ++i) {
      ks.push_back(1 + rng() % 4);
      rules.push_back(rng() % 2 ? MultiplicativeRule::Im : MultiplicativeRule::IIm);
    }
    const auto pq = make_partial_quotients(ks, rules);
    const DirectingPrefix full = expand(pq);
    for (std::size_t j = 0; j <= n; ++j) {
      const DirectingPrefix head(full.begin(), full.begin() + static_cast<long>(pq.times[j]));
      for (Alphabet a : {Alphabet::A3, Alphabet::A9})
        CHECK(multiplicative_stage_words(pq, a, j) == stage_words(head, a));
    }
  }
}

TEST_CASE("tower levels are disjoint translates of the base") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    const Ar9Map m0 = build_ar9(reconstruct_triple(random_prefix(rng, 7)), all_orders()[rng() % 6],
                                {small_rational(rng), small_rational(rng)});
    const auto stages = iterate_induction(m0, 7);
    const TowerFamily f = towers_at_stage(m0, stages, 1 + rng() % 7);
    IntervalSet seen;
    Rational total = 0;
    for (const Tower& t : f.nine)
      for (const IntervalSet& level : t.levels) {
        CHECK(level.measure() == t.base().measure());
        total += level.measure();
        seen = seen.unite(level);
      }
    CHECK(total == m0.space().measure());
    CHECK(seen == m0.space());
  }
}

TEST_CASE("preimage counts stay within three") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 12; ++trial) {
    const Ar9Map m = build_ar9(reconstruct_triple(random_prefix(rng, 20)), all_orders()[trial % 6]);
    const Word target = trajectory(m, random_point(m, rng), 150, Partition::Three);
    const PreimageReport r = preimage_clusters(m, target);
    for (std::size_t c : r.counts_by_length) {
      CHECK(c >= 1);
      CHECK(c <= 3);
    }
  }
}

TEST_CASE("theta zero never registers") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> ks;
    for (int i = 0; i < 15; ++i) ks.push_back(1 + rng() % 1000);
    const auto pq = make_partial_quotients(ks, std::vector<MultiplicativeRule>(ks.size(), MultiplicativeRule::IIm));
    const EigenScan s = eigenvalue_scan(pq, Rational(0));
    CHECK(s.survives());
    CHECK(s.exceedances.empty());
  }
}
