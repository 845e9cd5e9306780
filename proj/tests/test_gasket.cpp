#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "ariet/error.hpp"
#include "ariet/gasket.hpp"
#include "support.hpp"

using namespace ariet;

namespace {

Triple T(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

// Forward step written out longhand: d = a - b - c, then sort.
std::pair<Triple, int> hand_step(const Triple& t) {
  Rational d = t.a - t.b - t.c;
  if (d > t.b) return {{d, t.b, t.c}, 3};
  if (d > t.c) return {{t.b, d, t.c}, 2};
  return {{t.b, t.c, d}, 1};
}

}  // namespace

TEST_CASE("ar_step cases") {
  auto r1 = ar_step(T(7, 4, 2));
  CHECK(r1.next == T(4, 2, 1));
  CHECK(r1.symbol == DirectingSymbol::I);
  auto r2 = ar_step(T(9, 4, 2));
  CHECK(r2.next == T(4, 3, 2));
  CHECK(r2.symbol == DirectingSymbol::II);
  auto r3 = ar_step(T(12, 4, 3));
  CHECK(r3.next == T(5, 4, 3));
  CHECK(r3.symbol == DirectingSymbol::III);
  CHECK_THROWS_AS(ar_step(T(6, 4, 2)), NotInGasket);
  CHECK_THROWS_AS(ar_step(T(4, 2, 1)), NotInGasket);  // d = c
  CHECK_THROWS_AS(ar_step(T(2, 4, 7)), Inadmissible);
  CHECK_THROWS_AS(ar_step(T(4, 4, 1)), Inadmissible);
}

TEST_CASE("ar_step with fractional lengths") {
  Triple t{Rational(7, 2), Rational(5, 3), Rational(1, 4)};
  auto [expect, sym] = hand_step(t);
  auto r = ar_step(t);
  CHECK(r.next == expect);
  CHECK(static_cast<int>(r.symbol) == sym);
  CHECK(r.next.admissible());
}

TEST_CASE("directing_prefix exits") {
  auto a = directing_prefix(T(13, 7, 4), 10);
  CHECK(to_digits(a.prefix) == "11");
  CHECK(a.exit == GasketRun::Exit::NotInGasket);
  CHECK(a.exit_step == 3);
  CHECK(a.triples.size() == 3);
  CHECK(a.triples[2] == T(4, 2, 1));

  auto b = directing_prefix(T(6, 4, 2), 5);
  CHECK(b.prefix.empty());
  CHECK(b.exit_step == 1);

  auto c = directing_prefix(T(12, 4, 3), 1);
  CHECK(to_digits(c.prefix) == "3");
  CHECK(c.exit == GasketRun::Exit::Exhausted);

  auto d = directing_prefix(T(7, 4, 2), 10);
  CHECK(to_digits(d.prefix) == "1");
  CHECK(d.exit_step == 2);
}

TEST_CASE("reconstruct_triple") {
  CHECK(reconstruct_triple(parse_prefix("1"), T(4, 2, 1)) == T(7, 4, 2));
  CHECK(reconstruct_triple(parse_prefix("11"), T(4, 2, 1)) == T(13, 7, 4));
  CHECK(reconstruct_triple({}, T(4, 2, 1)) == T(4, 2, 1));
  CHECK(reconstruct_triple(parse_prefix("3")) == T(7, 2, 1));
  CHECK(reconstruct_triple(parse_prefix("2")) == T(7, 4, 1));
  CHECK_THROWS_AS(reconstruct_triple(parse_prefix("1"), T(1, 2, 3)), InvalidSeed);
  CHECK(default_seed() == T(4, 2, 1));
}

TEST_CASE("partial quotients") {
  auto pq = partial_quotients(parse_prefix("331231"));
  CHECK(pq.ks == std::vector<std::uint64_t>{3, 1, 2});
  CHECK(pq.rules == std::vector<MultiplicativeRule>{MultiplicativeRule::Im, MultiplicativeRule::IIm,
                                                    MultiplicativeRule::Im});
  CHECK(pq.times == std::vector<std::uint64_t>{0, 3, 4, 6});
  CHECK(pq.k(2) == 1);
  CHECK(pq.rule(2) == MultiplicativeRule::IIm);

  auto trib = partial_quotients(parse_prefix("111"));
  CHECK(trib.ks == std::vector<std::uint64_t>{1, 1, 1});

  CHECK_THROWS_AS(partial_quotients(parse_prefix("3")), IncompletePrefix);
  CHECK_THROWS_AS(partial_quotients(parse_prefix("1233")), IncompletePrefix);
  CHECK(partial_quotients({}).size() == 0);
}

TEST_CASE("omega lengths and the fully subtractive step") {
  auto l = omega_lengths(T(9, 4, 2));
  CHECK(l == std::array<Rational, 3>{13, 6, 11});
  CHECK(omega_lengths(T(4, 3, 2)) == std::array<Rational, 3>{7, 5, 6});
  CHECK(omega_lengths(T(4, 2, 1)) == std::array<Rational, 3>{6, 3, 5});
}

TEST_CASE("round trip over every prefix up to length 12") {
  // exhaustive; the subtractive property is checked across every step on the way
  std::size_t checked = 0;
  std::function<void(DirectingPrefix&)> walk = [&](DirectingPrefix& p) {
    const Triple t = reconstruct_triple(p);
    const GasketRun run = directing_prefix(t, p.size());
    REQUIRE(run.prefix == p);
    REQUIRE(run.exit == GasketRun::Exit::Exhausted);
    REQUIRE(run.triples.back() == default_seed());
    if (!p.empty()) {
      auto before = omega_lengths(run.triples[0]);
      auto after = omega_lengths(run.triples[1]);
      Rational s = std::min({before[0], before[1], before[2]});
      std::vector<Rational> expect, got(after.begin(), after.end());
      for (const Rational& x : before) expect.push_back(x == s ? s : Rational(x - s));
      std::sort(expect.begin(), expect.end());
      std::sort(got.begin(), got.end());
      REQUIRE(expect == got);
    }
    ++checked;
    if (p.size() == 12) return;
    for (int s = 1; s <= 3; ++s) {
      p.push_back(static_cast<DirectingSymbol>(s));
      walk(p);
      p.pop_back();
    }
  };
  DirectingPrefix p;
  walk(p);
  CHECK(checked == 797161);  // (3^13 - 1) / 2
}

TEST_CASE("expand inverts partial_quotients") {
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<int> digits(n, 0);  // each digit encodes (k - 1) * 2 + rule
    while (true) {
      std::vector<std::uint64_t> ks;
      std::vector<MultiplicativeRule> rules;
      for (int d : digits) {
        ks.push_back(static_cast<std::uint64_t>(d / 2 + 1));
        rules.push_back(d % 2 ? MultiplicativeRule::IIm : MultiplicativeRule::Im);
      }
      auto pq = make_partial_quotients(ks, rules);
      auto back = partial_quotients(expand(pq));
      REQUIRE(back.ks == ks);
      REQUIRE(back.rules == rules);
      REQUIRE(back.times == pq.times);
      ++count;
      std::size_t i = 0;
      while (i < n && ++digits[i] == 8) digits[i++] = 0;
      if (i == n) break;
    }
  }
  CHECK(count == 1 + 8 + 64 + 512 + 4096 + 32768);
}

TEST_CASE("parsing") {
  CHECK(parse_triple("7/1,4/1,2") == T(7, 4, 2));
  CHECK(parse_triple("1/2, 1/3, 1/5") == Triple{Rational(1, 2), Rational(1, 3), Rational(1, 5)});
  CHECK_THROWS_AS(parse_triple("1,2"), ParseError);
  CHECK_THROWS_AS(parse_triple("a,b,c"), ParseError);
  CHECK_THROWS_AS(parse_prefix("1241"), ParseError);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
  CHECK(to_exact_string(Rational(7)) == "7/1");
  CHECK(to_exact_string(make_rational(6, 4)) == "3/2");
}
