#include "ariet/iet.hpp"

#include <algorithm>
#include <string>

#include "ariet/error.hpp"

namespace ariet {

namespace {

struct Cut {
  Letter label;
  Rational length;
};

// Non-reversed left-to-right cuts of Omega, Omega', Omega''.
struct OmegaCuts {
  std::vector<Cut> domain;
  std::vector<Cut> image;
};

std::array<OmegaCuts, 3> omega_cuts(const Triple& t) {
  const Rational& a = t.a;
  const Rational& b = t.b;
  const Rational& c = t.c;
  return {{
      {{{nine(7), b - c}, {nine(8), c}, {nine(9), c}, {nine(1), a - c}},
       {{nine(1), a - c}, {nine(2), c}, {nine(6), c}, {nine(7), b - c}}},
      {{{nine(2), c}, {nine(3), b}}, {{nine(5), b}, {nine(9), c}}},
      {{{nine(4), a - b}, {nine(5), b}, {nine(6), c}}, {{nine(8), c}, {nine(3), b}, {nine(4), a - b}}},
  }};
}

void require_admissible(const Triple& t) {
  if (!t.admissible()) {
    auto s = to_strings(t);
    throw Inadmissible("triple (" + s[0] + "," + s[1] + "," + s[2] + ") is not a > b > c > 0");
  }
}

}  // namespace

std::array<int, 3> display_sequence(OrderTag order) {
  std::array<int, 3> seq{};
  switch (order.base) {
    case BaseOrder::First: seq = {kOmega, kOmegaPrime, kOmegaSecond}; break;
    case BaseOrder::Second: seq = {kOmegaPrime, kOmegaSecond, kOmega}; break;
    case BaseOrder::Third: seq = {kOmegaSecond, kOmega, kOmegaPrime}; break;
  }
  if (order.reversed) std::reverse(seq.begin(), seq.end());
  return seq;
}

std::vector<Letter> omega_domain_labels(int omega, OrderTag order) {
  Triple unit{Rational(3), Rational(2), Rational(1)};
  std::vector<Letter> out;
  const auto cuts = omega_cuts(unit);
  for (const Cut& cut : cuts.at(omega).domain) out.push_back(cut.label);
  if (order.reversed) std::reverse(out.begin(), out.end());
  return out;
}

std::array<OrderTag, 6> all_orders() {
  return {{{BaseOrder::First, false},
           {BaseOrder::Second, false},
           {BaseOrder::Third, false},
           {BaseOrder::First, true},
           {BaseOrder::Second, true},
           {BaseOrder::Third, true}}};
}

std::string to_string(OrderTag order) {
  std::string base;
  switch (order.base) {
    case BaseOrder::First: base = "first"; break;
    case BaseOrder::Second: base = "second"; break;
    case BaseOrder::Third: base = "third"; break;
  }
  return order.reversed ? "reversed-" + base : base;
}

OrderTag parse_order(std::string_view text) {
  for (OrderTag o : all_orders())
    if (to_string(o) == text) return o;
  throw ParseError("unknown order '" + std::string(text) +
                   "' (expected first|second|third, optionally prefixed by reversed-)");
}

Ar9Map layout_ar9(const Triple& t, OrderTag order, const std::array<Rational, 3>& omega_left) {
  require_admissible(t);
  Ar9Map m;
  m.triple_ = t;
  m.order_ = order;
  const auto lengths = omega_lengths(t);
  auto cuts = omega_cuts(t);
  for (int w = 0; w < 3; ++w) {
    m.omegas_[w] = {omega_left[w], omega_left[w] + lengths[w]};
    auto place = [&](std::vector<Cut> seq, std::array<Interval, 9>& table) {
      if (order.reversed) std::reverse(seq.begin(), seq.end());
      Rational x = omega_left[w];
      for (const Cut& cut : seq) {
        table[cut.label] = {x, x + cut.length};
        x += cut.length;
      }
    };
    place(cuts[w].domain, m.domain_);
    place(cuts[w].image, m.image_);
  }
  for (Letter i = 0; i < 9; ++i) m.by_left_.emplace_back(m.domain_[i].lo, i);
  std::sort(m.by_left_.begin(), m.by_left_.end());
  return m;
}

Ar9Map build_ar9(const Triple& t, OrderTag order, const std::pair<Rational, Rational>& gaps,
                 const Rational& origin) {
  require_admissible(t);
  if (gaps.first < 0 || gaps.second < 0) throw Inadmissible("gaps must be nonnegative");
  const auto lengths = omega_lengths(t);
  const auto seq = display_sequence(order);
  std::array<Rational, 3> left;
  Rational x = origin;
  for (int pos = 0; pos < 3; ++pos) {
    left[seq[pos]] = x;
    x += lengths[seq[pos]];
    if (pos == 0) x += gaps.first;
    if (pos == 1) x += gaps.second;
  }
  return layout_ar9(t, order, left);
}

std::optional<Letter> Ar9Map::piece_of(const Rational& x) const {
  auto it = std::upper_bound(by_left_.begin(), by_left_.end(), x,
                             [](const Rational& v, const auto& e) { return v < e.first; });
  if (it == by_left_.begin()) return std::nullopt;
  --it;
  if (domain_[it->second].contains(x)) return it->second;
  return std::nullopt;
}

IntervalSet Ar9Map::space() const {
  return IntervalSet(std::vector<Interval>(omegas_.begin(), omegas_.end()));
}

IntervalSet Ar9Map::letter_set(Letter a3) const {
  std::vector<Interval> parts;
  for (Letter i = 0; i < 9; ++i) {
    Letter group = i < 4 ? 0 : (i < 7 ? 1 : 2);
    if (group == a3) parts.push_back(domain_[i]);
  }
  return IntervalSet(std::move(parts));
}

std::vector<Rational> Ar9Map::breakpoints() const {
  std::vector<Rational> out;
  for (const Interval& iv : domain_) {
    out.push_back(iv.lo);
    out.push_back(iv.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<Rational, Letter> ar9_apply(const Ar9Map& m, const Rational& x) {
  auto piece = m.piece_of(x);
  if (!piece) throw OutOfDomain("point " + to_exact_string(x) + " is not in the domain");
  return {x + m.offset(*piece), *piece};
}

Word trajectory(const Ar9Map& m, Rational x, std::size_t n, Partition partition) {
  Word w{Alphabet::A9, {}};
  w.letters.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto [next, letter] = ar9_apply(m, x);
    w.letters.push_back(letter);
    x = std::move(next);
  }
  return partition == Partition::Three ? project(w, Alphabet::A3) : w;
}

Rational point_at(const Ar9Map& m, const Rational& s) {
  std::array<Interval, 3> sorted = m.omegas();
  std::sort(sorted.begin(), sorted.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  Rational rest = s;
  for (const Interval& iv : sorted) {
    if (rest < iv.length()) return iv.lo + rest;
    rest -= iv.length();
  }
  throw OutOfDomain("sample coordinate " + to_exact_string(s) + " exceeds the total length");
}

// ---- circle -------------------------------------------------------------

Rational reduce_mod(const Rational& x, const Rational& modulus) {
  Rational q = x / modulus;
  Rational r = x - Rational(floor_of(q)) * modulus;
  return r;
}

Rational Ar6Arc::length() const {
  Rational total = 0;
  for (const Interval& s : segments) total += s.length();
  return total;
}

Rational Ar6Arc::start() const { return segments.front().lo; }

namespace {

// Segments of the arc [start, start + len) on a circle of length L.
std::vector<Interval> arc_segments(const Rational& start, const Rational& len, const Rational& L) {
  Rational s = reduce_mod(start, L);
  Rational e = s + len;
  if (e <= L) return {{s, e}};
  return {{s, L}, {Rational(0), e - L}};
}

}  // namespace

Ar6Map::Ar6Map(Triple t, std::array<Ar6Arc, 6> arcs)
    : triple_(std::move(t)), circumference_(2 * (triple_.a + triple_.b + triple_.c)), arcs_(std::move(arcs)) {
  for (Ar6Arc& arc : arcs_) arc.offset = reduce_mod(arc.offset, circumference_);
}

std::optional<Letter> Ar6Map::arc_of(const Rational& x) const {
  Rational y = reduce_mod(x, circumference_);
  for (const Ar6Arc& arc : arcs_)
    for (const Interval& s : arc.segments)
      if (s.contains(y)) return arc.label;
  return std::nullopt;
}

std::vector<Rational> Ar6Map::breakpoints() const {
  std::vector<Rational> out;
  for (const Ar6Arc& arc : arcs_) out.push_back(arc.start());
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Rational, Letter> ar6_apply(const Ar6Map& m, const Rational& x) {
  auto label = m.arc_of(x);
  if (!label) throw StructureViolation("circle point " + to_exact_string(x) + " lies on no arc");
  const Rational& L = m.circumference();
  return {reduce_mod(reduce_mod(x, L) + m.arcs()[*label].offset, L), *label};
}

Ar6Map build_ar6_canonical(const Triple& t) {
  require_admissible(t);
  const Rational L = 2 * (t.a + t.b + t.c);
  const Rational half = t.a + t.b + t.c;
  const std::array<Rational, 3> len{t.a, t.b, t.c};
  std::array<Ar6Arc, 6> arcs;
  Rational x = 0;
  for (Letter i = 0; i < 6; ++i) {
    const Rational& l = len[i / 2];
    Rational swap = (i % 2 == 0) ? l : Rational(-l);
    arcs[i] = {i, arc_segments(x, l, L), swap + half};
    x += l;
  }
  return Ar6Map(t, std::move(arcs));
}

Rational glue_point(const Ar9Map& m, const Rational& x) {
  if (m.order().reversed)
    throw StructureViolation("the gluing is defined for non-reversed orders only");
  const auto& om = m.omegas();
  Rational before = 0;
  for (int w : {kOmega, kOmegaPrime, kOmegaSecond}) {
    if (om[w].contains(x)) return before + (x - om[w].lo);
    before += om[w].length();
  }
  throw OutOfDomain("point " + to_exact_string(x) + " is not in the domain");
}

Ar6Map glue_to_ar6(const Ar9Map& m) {
  if (m.order().reversed)
    throw StructureViolation("the gluing is defined for non-reversed orders only");
  const Triple& t = m.triple();
  const Rational L = 2 * (t.a + t.b + t.c);
  // A6 arc -> A9 pieces in circle order.
  const std::array<std::vector<int>, 6> members{{{1, 2}, {3, 4}, {5}, {6, 7}, {8}, {9}}};
  std::array<Ar6Arc, 6> arcs;
  for (Letter label = 0; label < 6; ++label) {
    const auto& ids = members[label];
    Rational start = glue_point(m, m.piece(nine(ids.front())).lo);
    Rational offset = reduce_mod(glue_point(m, m.image(nine(ids.front())).lo) - start, L);
    Rational cursor = start;
    Rational len = 0;
    for (int id : ids) {
      const Interval& piece = m.piece(nine(id));
      Rational lo = glue_point(m, piece.lo);
      if (reduce_mod(lo - cursor, L) != 0)
        throw StructureViolation("glued pieces of arc " + std::to_string(label) + " are not contiguous");
      Rational off = reduce_mod(glue_point(m, m.image(nine(id)).lo) - lo, L);
      if (off != offset)
        throw StructureViolation("glued pieces of arc " + std::to_string(label) + " move differently");
      cursor = lo + piece.length();
      len += piece.length();
    }
    arcs[label] = {label, arc_segments(start, len, L), offset};
  }
  return Ar6Map(t, std::move(arcs));
}

std::optional<Rational> rotation_between(const Ar6Map& a, const Ar6Map& b) {
  if (a.circumference() != b.circumference()) return std::nullopt;
  const Rational& L = a.circumference();
  Rational rho = reduce_mod(b.arcs()[0].start() - a.arcs()[0].start(), L);
  for (Letter i = 0; i < 6; ++i) {
    const Ar6Arc& x = a.arcs()[i];
    const Ar6Arc& y = b.arcs()[i];
    if (x.length() != y.length() || x.offset != y.offset) return std::nullopt;
    if (reduce_mod(x.start() + rho, L) != y.start()) return std::nullopt;
  }
  return rho;
}

}  // namespace ariet
