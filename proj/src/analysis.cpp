#include "ariet/analysis.hpp"

#include <algorithm>

#include "ariet/error.hpp"

namespace ariet {

namespace {

Rational inverse(std::uint64_t k) { return Rational(1, static_cast<unsigned long>(k)); }

Rational sum_of(std::span<const Rational> xs) {
  Rational total = 0;
  for (const Rational& x : xs) total += x;
  return total;
}

Letter group_of(Letter i) { return i < 4 ? 0 : (i < 7 ? 1 : 2); }

}  // namespace

std::vector<XiTerm> xi_sequence(const PartialQuotients& pq) {
  using R = MultiplicativeRule;
  const std::size_t N = pq.size();
  std::vector<XiTerm> out;
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    if (pq.rule(n + 1) == R::Im && pq.k(n + 1) >= 2) {
      if (n + 2 > N) continue;
      out.push_back({n, 1, 0, inverse(pq.k(n + 2))});
      continue;
    }
    std::size_t j = n + 2;
    while (j <= N && pq.rule(j) != R::Im) ++j;
    if (j > N) continue;
    const std::size_t l = j - n;
    if (n + l + 1 > N) continue;
    Integer den = 1;
    for (std::size_t i = 0; i < l; ++i) den *= 3;
    for (std::size_t i = n + 2; i <= n + l + 1; ++i) den *= static_cast<unsigned long>(pq.k(i));
    out.push_back({n, 2, l, Rational(Integer(1), den)});
  }
  return out;
}

Rational Fraction::reduced() const {
  return make_rational(p, q);
}

double Fraction::approx() const {
  // Scale to keep the quotient representable when p and q are enormous.
  const long shift = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 64;
  if (shift <= 0) return p.get_d() / q.get_d();
  Integer ps = p >> shift, qs = q >> shift;
  return ps.get_d() / qs.get_d();
}

namespace {

Fraction split_sum(std::span<const std::uint64_t> ks) {
  if (ks.size() == 1) return {Integer(1), Integer(static_cast<unsigned long>(ks[0]))};
  const std::size_t mid = ks.size() / 2;
  Fraction l = split_sum(ks.first(mid));
  Fraction r = split_sum(ks.subspan(mid));
  return {l.p * r.q + r.p * l.q, l.q * r.q};
}

}  // namespace

Fraction reciprocal_sum(std::span<const std::uint64_t> ks) {
  if (ks.empty()) return {Integer(0), Integer(1)};
  if (std::find(ks.begin(), ks.end(), 0u) != ks.end()) throw Inadmissible("partial quotients must be positive");
  return split_sum(ks);
}

TwmReport twm_pattern(const PartialQuotients& pq, const Thresholds& th) {
  TwmReport r;
  const std::size_t N = pq.size();
  for (std::size_t n = 1; n <= N; ++n)
    if (pq.rule(n) == MultiplicativeRule::Im) r.n_i.push_back(n);
  std::vector<Rational> after1, at;
  for (std::size_t n : r.n_i) {
    at.push_back(inverse(pq.k(n)));
    if (n + 1 <= N) after1.push_back(inverse(pq.k(n + 1)));
    if (n + 2 <= N) r.k_after2.push_back(pq.k(n + 2));
  }
  const std::size_t half = r.k_after2.size() / 2;
  for (std::size_t i = 0; i < r.k_after2.size(); ++i) {
    auto& slot = i < half ? r.max_first_half : r.max_second_half;
    slot = std::max(slot, r.k_after2[i]);
  }
  r.bounded_evidence = r.k_after2.size() < 2 || r.max_second_half <= r.max_first_half;
  r.inv_k_after1_sum = sum_of(after1);
  r.inv_k_at_sum = sum_of(at);
  r.inv_k_after1_tail = sum_of(std::span<const Rational>(after1).subspan(after1.size() / 2));
  r.inv_k_at_tail = sum_of(std::span<const Rational>(at).subspan(at.size() / 2));
  r.pattern = !r.k_after2.empty() && !r.bounded_evidence && r.inv_k_after1_tail <= th.nue_tail &&
              r.inv_k_at_tail <= th.nue_tail;
  return r;
}

ConditionReport condition_report(const PartialQuotients& pq, const Thresholds& th) {
  ConditionReport r;
  r.xi = xi_sequence(pq);
  Rational running = 0;
  for (const XiTerm& t : r.xi) {
    running += t.value;
    r.xi_partial.push_back(running);
  }
  Rational second_half = 0;
  for (std::size_t i = r.xi.size() / 2; i < r.xi.size(); ++i) second_half += r.xi[i].value;
  r.mtours_evidence = !r.xi.empty() && running >= th.xi_sum && second_half >= th.xi_trend_fraction * running;

  r.inv_k_sum = reciprocal_sum(pq.ks).reduced();
  r.inv_k_tail = reciprocal_sum(std::span<const std::uint64_t>(pq.ks).subspan(pq.size() / 2)).reduced();
  r.nue_evidence = pq.size() >= 2 && r.inv_k_tail <= th.nue_tail;

  if (!pq.ks.empty() && !r.xi.empty()) {
    const std::uint64_t k0 = *std::max_element(pq.ks.begin(), pq.ks.end());
    const Rational bound(Integer(1), Integer(9) * Integer(static_cast<unsigned long>(k0)) *
                                         Integer(static_cast<unsigned long>(k0)));
    for (std::size_t i = r.xi.size() / 2; i < r.xi.size(); ++i)
      if (r.xi[i].value >= bound) r.bqp_bound = true;
  }
  r.twm = twm_pattern(pq, th);
  return r;
}

TourabPatterns tourab_patterns(const PartialQuotients& pq) {
  using R = MultiplicativeRule;
  TourabPatterns out;
  for (std::size_t s = 0; s + 2 <= pq.size(); ++s) {
    if (pq.rule(s + 2) != R::Im) continue;
    if (pq.k(s + 2) == 1) out.pattern_i.push_back(s);
    if (pq.rule(s + 1) == R::IIm && pq.k(s + 1) == 1) out.pattern_ii.push_back(s);
  }
  return out;
}

EigenScan eigenvalue_scan(const PartialQuotients& pq, const Rational& theta, const Thresholds& th) {
  EigenScan scan;
  scan.theta = theta;
  scan.floor = Rational(Integer(1), 2 * Integer(theta.get_den()));
  const auto heights = multiplicative_heights(pq);
  const std::size_t N = pq.size();
  for (std::size_t n = 0; n < N; ++n) {
    Rational v = Rational(static_cast<unsigned long>(pq.k(n + 1))) *
                 distance_to_integer(Rational(heights[n].a) * theta);
    if (v >= scan.floor) scan.exceedances.push_back(n);
    scan.values.push_back(std::move(v));
  }
  const std::size_t need = std::max<std::size_t>(th.eigen_recurrences, 1);
  if (scan.exceedances.size() >= need && scan.exceedances.back() >= N / 2) scan.rejected_at = scan.exceedances[need - 1];
  return scan;
}

Rational FrequencyVector::frequency(Letter i) const {
  if (length == 0) return 0;
  return make_rational(Integer(static_cast<unsigned long>(counts[i])), Integer(static_cast<unsigned long>(length)));
}

Rational FrequencyVector::total() const {
  Rational t = 0;
  for (Letter i = 0; i < 9; ++i) t += frequency(i);
  return t;
}

FrequencyVector birkhoff_frequencies(const Ar9Map& m, const Rational& x, std::size_t n) {
  FrequencyVector f;
  f.start = x;
  f.length = n;
  Rational y = x;
  for (std::size_t j = 0; j < n; ++j) {
    auto [next, letter] = ar9_apply(m, y);
    ++f.counts[letter];
    y = std::move(next);
  }
  return f;
}

Rational l1_distance(const FrequencyVector& u, const FrequencyVector& v) {
  Rational d = 0;
  for (Letter i = 0; i < 9; ++i) d += abs(u.frequency(i) - v.frequency(i));
  return d;
}

TwoMeasureResult two_measure_experiment(const Ar9Map& m0, const Ar9Map& stage_map, std::size_t depth,
                                        std::size_t rules_i_count, std::size_t n) {
  TwoMeasureResult r;
  r.depth = depth;
  r.parity_l = rules_i_count;
  if (rules_i_count % 2 == 1) std::swap(r.first_tower, r.second_tower);
  r.first = birkhoff_frequencies(m0, stage_map.piece(r.first_tower).midpoint(), n);
  r.second = birkhoff_frequencies(m0, stage_map.piece(r.second_tower).midpoint(), n);
  r.distance = l1_distance(r.first, r.second);
  return r;
}

PreimageReport preimage_clusters(const Ar9Map& m, const Word& target) {
  if (target.alphabet != Alphabet::A3) throw std::invalid_argument("preimage target must be an A3 word");
  struct Item {
    Interval origin;
    Interval cur;
  };
  std::vector<Item> items;
  for (Letter i = 0; i < 9; ++i) items.push_back({m.piece(i), m.piece(i)});
  PreimageReport report;
  report.depth = target.size();
  for (std::size_t j = 0; j < target.size(); ++j) {
    std::vector<Item> next;
    for (Item& it : items) {
      const Letter letter = *m.piece_of(it.cur.lo);
      if (group_of(letter) != target.letters[j]) continue;
      const Rational off = m.offset(letter);
      const Interval moved = it.cur.translated(off);
      for (Letter i = 0; i < 9; ++i)
        if (auto part = intersect(moved, m.piece(i)))
          next.push_back({part->translated(it.origin.lo - it.cur.lo - off), *part});
    }
    if (next.empty())
      throw NotAFactor("'" + to_string(Word{Alphabet::A3, {target.letters.begin(), target.letters.begin() + j + 1}}) +
                       "' is not the coding of any point");
    items = std::move(next);
    std::vector<Interval> origins;
    for (const Item& it : items) origins.push_back(it.origin);
    report.witness = IntervalSet(std::move(origins));
    report.counts_by_length.push_back(report.witness.components());
  }
  if (target.empty()) report.witness = m.space();
  report.clusters = report.witness.components();
  return report;
}

}  // namespace ariet
