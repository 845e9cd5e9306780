#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ariet/analysis.hpp"
#include "ariet/error.hpp"
#include "ariet/induction.hpp"
#include "support.hpp"

using namespace ariet;
using namespace testing_support;

namespace {

const Triple k742{Rational(7), Rational(4), Rational(2)};

PartialQuotients constant_pq(std::size_t n, std::uint64_t k, MultiplicativeRule r = MultiplicativeRule::Im) {
  return make_partial_quotients(std::vector<std::uint64_t>(n, k), std::vector<MultiplicativeRule>(n, r));
}

// xi read straight off the digit string: blocks are maximal "3...3x" runs.
std::vector<std::pair<std::size_t, Rational>> brute_xi(const std::string& digits) {
  std::vector<long> k;
  std::string rule;
  long run = 0;
  for (char ch : digits) {
    ++run;
    if (ch != '3') {
      k.push_back(run);
      rule += ch;
      run = 0;
    }
  }
  const std::size_t N = k.size();
  std::vector<std::pair<std::size_t, Rational>> out;
  for (std::size_t n = 0; n < N; ++n) {
    // rule[n] is the (n+1)-th rule, k[n] is k_{n+1}
    if (rule[n] == '1' && k[n] >= 2) {
      if (n + 1 < N) out.emplace_back(n, Rational(1, k[n + 1]));
      continue;
    }
    const auto next = rule.find('1', n + 1);  // 0-based position of the (n+l)-th rule
    if (next == std::string::npos) continue;
    const std::size_t l = next + 1 - n;
    if (n + l + 1 > N) continue;
    Rational v(1);
    for (std::size_t i = 0; i < l; ++i) v /= 3;
    for (std::size_t i = n + 2; i <= n + l + 1; ++i) v /= k[i - 1];
    out.emplace_back(n, v);
  }
  return out;
}

}  // namespace

TEST_CASE("xi on constant sequences") {
  const auto trib = xi_sequence(constant_pq(12, 1));
  CHECK(trib.size() == 10);
  for (const XiTerm& t : trib) {
    CHECK(t.value == Rational(1, 9));
    CHECK(t.branch == 2);
    CHECK(t.l == 2);
  }
  const auto threes = xi_sequence(constant_pq(10, 3));
  CHECK(threes.size() == 9);
  for (const XiTerm& t : threes) {
    CHECK(t.value == Rational(1, 3));
    CHECK(t.branch == 1);
  }
  CHECK(xi_sequence({}).empty());
}

TEST_CASE("xi agrees with a re-derivation from the raw prefix") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const DirectingPrefix p = random_prefix(rng, 5 + rng() % 40);
    const auto brute = brute_xi(to_digits(p));
    const auto xs = xi_sequence(partial_quotients(p));
    REQUIRE(xs.size() == brute.size());
    std::set<std::size_t> indices;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(xs[i].n == brute[i].first);
      CHECK(xs[i].value == brute[i].second);
      CHECK(xs[i].value > 0);
      CHECK(xs[i].value <= 1);
      indices.insert(xs[i].n);
    }
    CHECK(indices.size() == xs.size());  // one branch per index
  }
}

TEST_CASE("reciprocal sums") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint64_t> ks;
    Rational direct = 0;
    for (std::size_t i = 0, n = 1 + rng() % 60; i < n; ++i) {
      ks.push_back(1 + rng() % 1000);
      direct += Rational(1, static_cast<long>(ks.back()));
    }
    CHECK(reciprocal_sum(ks).reduced() == direct);
  }
  std::vector<std::uint64_t> squares;
  for (std::uint64_t n = 1; n <= 20000; ++n) squares.push_back(n * n);
  const Fraction f = reciprocal_sum(squares);
  CHECK(f.at_most(Rational(17, 10)));
  CHECK_FALSE(f.at_most(Rational(16, 10)));
  CHECK(f.approx() == doctest::Approx(1.64488).epsilon(1e-5));
}

TEST_CASE("condition report flags") {
  std::vector<std::uint64_t> sq;
  for (std::uint64_t n = 1; n <= 200; ++n) sq.push_back(n * n);
  const auto fast = condition_report(make_partial_quotients(sq, std::vector<MultiplicativeRule>(200, MultiplicativeRule::Im)));
  CHECK(fast.nue_evidence);
  CHECK(fast.inv_k_sum <= Rational(17, 10));
  const auto trib = condition_report(constant_pq(40, 1));
  CHECK_FALSE(trib.nue_evidence);
  CHECK(trib.mtours_evidence);
  CHECK(trib.bqp_bound);
  for (std::size_t i = 1; i < trib.xi_partial.size(); ++i) CHECK(trib.xi_partial[i] > trib.xi_partial[i - 1]);
}

TEST_CASE("twm pattern") {
  const TwmReport trib = twm_pattern(constant_pq(20, 1));
  CHECK(trib.n_i.size() == 20);
  CHECK(trib.n_i.front() == 1);
  CHECK(trib.k_after2.size() == 18);
  for (auto k : trib.k_after2) CHECK(k == 1);
  CHECK(trib.bounded_evidence);
  CHECK_FALSE(trib.pattern);

  const TwmReport empty = twm_pattern({});
  CHECK(empty.n_i.empty());
  CHECK_FALSE(empty.pattern);

  std::vector<std::uint64_t> ks;
  std::vector<MultiplicativeRule> rules;
  for (int i = 1; i <= 10; ++i) {
    ks.push_back(1);
    rules.push_back(MultiplicativeRule::Im);
    ks.push_back(std::uint64_t{1} << i);
    rules.push_back(MultiplicativeRule::IIm);
  }
  const TwmReport alt = twm_pattern(make_partial_quotients(ks, rules));
  for (std::size_t i = 0; i < alt.n_i.size(); ++i) CHECK(alt.n_i[i] == 2 * i + 1);
  CHECK(alt.inv_k_at_sum == 10);
}

TEST_CASE("tourab patterns") {
  const auto trib = tourab_patterns(constant_pq(10, 1));
  CHECK(trib.pattern_i.size() == 9);
  for (std::size_t s = 0; s < trib.pattern_i.size(); ++s) CHECK(trib.pattern_i[s] == s);
  CHECK(trib.pattern_ii.empty());
  const auto mixed = tourab_patterns(make_partial_quotients(
      {1, 1, 1, 2}, {MultiplicativeRule::IIm, MultiplicativeRule::IIm, MultiplicativeRule::Im, MultiplicativeRule::Im}));
  CHECK(mixed.pattern_ii == std::vector<std::size_t>{1});
  CHECK(mixed.pattern_i == std::vector<std::size_t>{1});
  CHECK(tourab_patterns({}).pattern_i.empty());
}

TEST_CASE("eigenvalue scans") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pq = partial_quotients(random_prefix(rng, 30));
    const EigenScan zero = eigenvalue_scan(pq, Rational(0));
    CHECK(zero.survives());
    for (const Rational& v : zero.values) CHECK(v == 0);
  }
  const auto trib = constant_pq(30, 1);
  const EigenScan half = eigenvalue_scan(trib, Rational(1, 2));
  CHECK_FALSE(half.survives());
  CHECK(half.values[0] == Rational(1, 2));  // h_a = 1
  CHECK(half.values[3] == Rational(1, 2));  // h_a = 7
  CHECK(half.floor == Rational(1, 4));
}

TEST_CASE("frequencies") {
  const Ar9Map m = build_ar9(k742, {});
  const FrequencyVector one = birkhoff_frequencies(m, Rational(6), 1);
  CHECK(one.counts[0] == 1);
  CHECK(one.frequency(0) == 1);
  std::mt19937_64 rng(73);
  const Ar9Map g = build_ar9(reconstruct_triple(random_prefix(rng, 12)), {});
  const Rational x = random_point(g, rng);
  const FrequencyVector f = birkhoff_frequencies(g, x, 3000);
  CHECK(f.total() == 1);
  const std::string w = to_string(trajectory(g, x, 3000));
  for (Letter i = 0; i < 9; ++i)
    CHECK(f.frequency(i) == make_rational(std::count(w.begin(), w.end(), "123456789"[i]), 3000));
  const FrequencyVector h = birkhoff_frequencies(g, random_point(g, rng), 3000);
  CHECK(l1_distance(f, h) == l1_distance(h, f));
  CHECK(l1_distance(f, f) == 0);
}

TEST_CASE("two-measure experiment is symmetric and well formed at depth zero") {
  std::vector<std::uint64_t> ks{2, 4, 8};
  const auto pq = make_partial_quotients(ks, std::vector<MultiplicativeRule>(3, MultiplicativeRule::Im));
  const Ar9Map m0 = build_ar9(reconstruct_triple(expand(pq)), {});
  const auto stages = iterate_induction(m0, pq.times[3]);
  const Ar9Map& top = stages.back().map;
  const auto even = two_measure_experiment(m0, top, pq.times[3], 2, 2000);
  const auto odd = two_measure_experiment(m0, top, pq.times[3], 3, 2000);
  CHECK(even.first.counts == odd.second.counts);
  CHECK(even.second.counts == odd.first.counts);
  CHECK(even.distance == odd.distance);
  CHECK(even.first.start == top.piece(nine(1)).midpoint());
  const auto flat = two_measure_experiment(m0, m0, 0, 0, 100);
  CHECK(flat.first.start == m0.piece(nine(1)).midpoint());
  CHECK(flat.second.start == m0.piece(nine(4)).midpoint());
  CHECK(flat.first.total() == 1);
}

TEST_CASE("preimage clusters") {
  const Ar9Map m = build_ar9(k742, {});
  const PreimageReport c = preimage_clusters(m, parse_word("c", Alphabet::A3));
  CHECK(c.witness == IntervalSet{Interval{Rational(2), Rational(6)}});
  CHECK(c.clusters == 1);
  CHECK(preimage_clusters(m, parse_word("b", Alphabet::A3)).clusters == 2);
  CHECK_THROWS_AS(preimage_clusters(m, parse_word("cc", Alphabet::A3)), NotAFactor);

  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    const Ar9Map g = build_ar9(reconstruct_triple(random_prefix(rng, 30)), all_orders()[trial % 6]);
    const Rational x = random_point(g, rng);
    const Word target = trajectory(g, x, 200, Partition::Three);
    const PreimageReport r = preimage_clusters(g, target);
    CHECK(r.clusters >= 1);
    CHECK(r.clusters <= 3);
    CHECK(r.counts_by_length.size() == 200);
    CHECK(r.witness.contains(x));
    // membership oracle: sampled points are in the witness iff their coding starts with the target
    for (int s = 0; s < 40; ++s) {
      const Rational y = s % 2 ? random_point(g, rng) : r.witness.parts()[s / 2 % r.witness.components()].lo;
      CHECK(r.witness.contains(y) == (trajectory(g, y, 200, Partition::Three) == target));
    }
  }
}
