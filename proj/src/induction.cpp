#include "ariet/induction.hpp"

#include <algorithm>
#include <deque>

#include "ariet/error.hpp"

namespace ariet {
namespace {

// A maximal interval of J_a on which the first return is one translation.
struct Portion {
  Interval origin;
  Rational shift;
  std::vector<Letter> itinerary;
};

std::vector<Portion> first_return(const Ar9Map& m, std::size_t cap) {
  const IntervalSet target = m.letter_set(0);
  struct Item {
    Interval cur;
    Rational shift;
    std::vector<Letter> itinerary;
  };
  std::deque<Item> work;
  for (Letter p = 0; p < 4; ++p) work.push_back({m.piece(p), Rational(0), {}});

  std::vector<Portion> out;
  while (!work.empty()) {
    Item item = std::move(work.front());
    work.pop_front();
    auto letter = m.piece_of(item.cur.lo);
    if (!letter || !m.piece(*letter).contains(item.cur))
      throw StructureViolation("interval " + to_string(item.cur) + " straddles a piece boundary");
    item.itinerary.push_back(*letter);
    if (item.itinerary.size() > cap)
      throw ReturnTimeCapExceeded("no return to J_a within " + std::to_string(cap) + " steps");
    const Rational off = m.offset(*letter);
    const Interval next = item.cur.translated(off);
    item.shift += off;
    const IntervalSet back = target.intersect(next);
    for (const Interval& part : back.parts())
      out.push_back({part.translated(-item.shift), item.shift, item.itinerary});
    for (Letter j = 4; j < 9; ++j)
      if (auto part = intersect(next, m.piece(j))) work.push_back({*part, item.shift, item.itinerary});
  }

  std::sort(out.begin(), out.end(), [](const Portion& x, const Portion& y) { return x.origin.lo < y.origin.lo; });
  std::vector<Portion> merged;
  for (Portion& p : out) {
    if (!merged.empty()) {
      Portion& last = merged.back();
      if (last.origin.hi == p.origin.lo && last.shift == p.shift && last.itinerary == p.itinerary) {
        last.origin.hi = p.origin.hi;
        continue;
      }
    }
    merged.push_back(std::move(p));
  }
  return merged;
}

struct Fit {
  Ar9Map map;
  std::array<std::size_t, 9> portion_of{};  // A9 letter -> index into portions
};

std::vector<Fit> fit_layouts(const std::vector<Portion>& portions) {
  std::vector<Fit> fits;
  if (portions.size() != 9) return fits;
  for (OrderTag order : all_orders()) {
    Fit fit;
    std::array<Rational, 3> left;
    std::size_t next = 0;
    bool contiguous = true;
    for (int omega : display_sequence(order)) {
      left[omega] = portions[next].origin.lo;
      const std::size_t first = next;
      for (Letter label : omega_domain_labels(omega, order)) {
        if (next > first && portions[next - 1].origin.hi != portions[next].origin.lo) contiguous = false;
        fit.portion_of[label] = next++;
      }
    }
    if (!contiguous) continue;
    auto len = [&](int i) { return portions[fit.portion_of[nine(i)]].origin.length(); };
    Triple t{len(1) + len(8), len(5), len(8)};
    if (!t.admissible()) continue;
    fit.map = layout_ar9(t, order, left);
    bool same = true;
    for (Letter i = 0; i < 9 && same; ++i) {
      const Portion& p = portions[fit.portion_of[i]];
      same = fit.map.piece(i) == p.origin && fit.map.image(i) == p.origin.translated(p.shift);
    }
    if (same) fits.push_back(std::move(fit));
  }
  return fits;
}

}  // namespace

OrderTag predicted_order(OrderTag o, DirectingSymbol s) {
  switch (s) {
    case DirectingSymbol::I:
      switch (o.base) {
        case BaseOrder::First: return {BaseOrder::Third, o.reversed};
        case BaseOrder::Second: return {BaseOrder::First, o.reversed};
        case BaseOrder::Third: return {BaseOrder::Second, o.reversed};
      }
      break;
    case DirectingSymbol::II:
      switch (o.base) {
        case BaseOrder::First: return {BaseOrder::Second, !o.reversed};
        case BaseOrder::Second: return {BaseOrder::First, !o.reversed};
        case BaseOrder::Third: return {BaseOrder::Third, !o.reversed};
      }
      break;
    case DirectingSymbol::III: return o;
  }
  return o;
}

InductionStage induce_step(const Ar9Map& m, std::size_t cap) {
  const StepResult step = ar_step(m.triple());
  const auto portions = first_return(m, cap);
  auto fits = fit_layouts(portions);
  if (fits.empty())
    throw StructureViolation("first-return map (" + std::to_string(portions.size()) +
                             " pieces) is not an AR9 exchange in any order");
  const OrderTag predicted = predicted_order(m.order(), step.symbol);
  auto chosen = std::find_if(fits.begin(), fits.end(), [&](const Fit& f) { return f.map.order() == predicted; });
  if (chosen == fits.end()) chosen = fits.begin();

  InductionStage stage{0, std::move(chosen->map), step.symbol, predicted, {}, {}};
  for (Letter i = 0; i < 9; ++i) {
    const Portion& p = portions[chosen->portion_of[i]];
    stage.return_time[i] = p.itinerary.size();
    stage.return_word[i] = Word{Alphabet::A9, p.itinerary};
  }
  return stage;
}

InductionReport verify_induction(const Ar9Map& m, std::size_t cap) {
  InductionReport report;
  InductionStage stage;
  try {
    stage = induce_step(m, cap);
  } catch (const StructureViolation& e) {
    report.detail = e.what();
    return report;
  }
  const StepResult step = ar_step(m.triple());
  report.triple_matches = stage.map.triple() == step.next;
  report.order_matches = stage.map.order() == stage.predicted;

  std::array<Rational, 3> left;
  for (int w = 0; w < 3; ++w) left[w] = stage.map.omegas()[w].lo;
  const Ar9Map expected = layout_ar9(step.next, stage.predicted, left);
  report.lengths_match = report.images_match = true;
  for (Letter i = 0; i < 9; ++i) {
    if (stage.map.piece(i).length() != expected.piece(i).length() || stage.map.piece(i) != expected.piece(i))
      report.lengths_match = false;
    if (stage.map.image(i) != expected.image(i)) report.images_match = false;
  }
  const Substitution sigma = sigma9(step.symbol);
  report.words_match = true;
  for (Letter i = 0; i < 9; ++i)
    if (stage.return_word[i].letters != sigma.images[i]) report.words_match = false;

  if (!report.triple_matches) report.detail = "induced triple differs from the arithmetic step";
  else if (!report.order_matches)
    report.detail = "induced order " + to_string(stage.map.order()) + ", predicted " + to_string(stage.predicted);
  else if (!report.lengths_match) report.detail = "piece table differs from the predicted layout";
  else if (!report.images_match) report.detail = "image table differs from the predicted layout";
  else if (!report.words_match) report.detail = "return words differ from the substitution";
  return report;
}

std::vector<InductionStage> iterate_induction(const Ar9Map& m, std::size_t K, std::size_t cap) {
  std::vector<InductionStage> stages;
  stages.reserve(K);
  const Ar9Map* current = &m;
  for (std::size_t k = 1; k <= K; ++k) {
    try {
      stages.push_back(induce_step(*current, cap));
    } catch (const NotInGasket& e) {
      throw NotInGasket(k, e.reason());
    }
    stages.back().k = k;
    current = &stages.back().map;
  }
  return stages;
}

}  // namespace ariet

