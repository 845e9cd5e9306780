#include "ariet/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace ariet {

namespace {

constexpr double kWidth = 960;
constexpr double kMargin = 40;

const char* const kPalette[9] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                 "#edc948", "#b07aa1", "#ff9da7", "#9c755f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Scale {
  Rational lo;
  double unit;
  double x(const Rational& v) const { return kMargin + to_double(v - lo) * unit; }
};

Scale scale_for(const Rational& lo, const Rational& hi) {
  const double span = to_double(hi - lo);
  return {lo, span > 0 ? (kWidth - 2 * kMargin) / span : 1.0};
}

void header(std::ostringstream& out, double height, const std::string& title) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n" << kSvgVersionComment << "\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(kWidth) << " " << num(height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<title>" << title << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void bar(std::ostringstream& out, const Scale& s, const Interval& iv, double y, double h, Letter letter,
         const std::string& text, const std::string& role) {
  const double x0 = s.x(iv.lo), x1 = s.x(iv.hi);
  out << "<rect class=\"" << role << "\" data-letter=\"" << int(letter) + 1 << "\" data-lo=\"" << to_exact_string(iv.lo)
      << "\" data-hi=\"" << to_exact_string(iv.hi) << "\" x=\"" << num(x0) << "\" y=\"" << num(y) << "\" width=\""
      << num(x1 - x0) << "\" height=\"" << num(h) << "\" fill=\"" << kPalette[letter]
      << "\" fill-opacity=\"0.55\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
  if (!text.empty())
    out << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(y + h / 2 + 4) << "\" text-anchor=\"middle\">" << text
        << "</text>\n";
}

void ticks(std::ostringstream& out, const Scale& s, const std::vector<Rational>& points, double y) {
  for (const Rational& p : points) {
    out << "<line class=\"tick\" data-at=\"" << to_exact_string(p) << "\" x1=\"" << num(s.x(p)) << "\" y1=\"" << num(y)
        << "\" x2=\"" << num(s.x(p)) << "\" y2=\"" << num(y + 6) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(s.x(p)) << "\" y=\"" << num(y + 17) << "\" text-anchor=\"middle\" font-size=\"8\">"
        << to_exact_string(p) << "</text>\n";
  }
}

std::pair<Rational, Rational> extent(const Ar9Map& m) {
  Rational lo = m.omegas()[0].lo, hi = m.omegas()[0].hi;
  for (const Interval& w : m.omegas()) {
    if (w.lo < lo) lo = w.lo;
    if (w.hi > hi) hi = w.hi;
  }
  return {lo, hi};
}

void map_rows(std::ostringstream& out, const Ar9Map& m, const Scale& s, double y_domain, double y_image,
              const std::string& prefix) {
  for (Letter i = 0; i < 9; ++i) bar(out, s, m.piece(i), y_domain, 26, i, prefix + std::to_string(i + 1), "domain");
  for (Letter i = 0; i < 9; ++i)
    bar(out, s, m.image(i), y_image, 26, i, "T" + prefix + std::to_string(i + 1), "image");
}

}  // namespace

std::string svg_layout(const Ar9Map& m) {
  std::ostringstream out;
  header(out, 200, "AR9 exchange, " + to_string(m.order()));
  auto [lo, hi] = extent(m);
  const Scale s = scale_for(lo, hi);
  out << "<text x=\"" << num(kMargin) << "\" y=\"20\">order " << to_string(m.order()) << "; triple ("
      << to_exact_string(m.triple().a) << ", " << to_exact_string(m.triple().b) << ", "
      << to_exact_string(m.triple().c) << ")</text>\n";
  map_rows(out, m, s, 40, 110, "I");
  ticks(out, s, m.breakpoints(), 68);
  out << "</svg>\n";
  return out.str();
}

std::string svg_induction(const Ar9Map& m, const InductionStage& stage) {
  std::ostringstream out;
  header(out, 300, "induction step " + std::to_string(stage.k));
  auto [lo, hi] = extent(m);
  const Scale s = scale_for(lo, hi);
  out << "<text x=\"" << num(kMargin) << "\" y=\"20\">case " << symbol_name(stage.symbol) << ": "
      << to_string(m.order()) << " to " << to_string(stage.map.order()) << "</text>\n";
  map_rows(out, m, s, 40, 100, "I");
  // dashed frame around the induction set
  const IntervalSet ja = m.letter_set(0);
  for (const Interval& iv : ja.parts())
    out << "<rect class=\"induction-set\" x=\"" << num(s.x(iv.lo)) << "\" y=\"36\" width=\""
        << num(s.x(iv.hi) - s.x(iv.lo)) << "\" height=\"34\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"5,3\"/>\n";
  map_rows(out, stage.map, s, 180, 240, "I'");
  out << "</svg>\n";
  return out.str();
}

std::string svg_towers(const TowerFamily& f) {
  std::size_t top = 0;
  for (const Tower& t : f.nine) top = std::max(top, t.height());
  const double row = std::max(2.0, std::min(16.0, 600.0 / static_cast<double>(top)));
  const double height = 80 + row * static_cast<double>(top);
  std::ostringstream out;
  header(out, height, "towers at stage " + std::to_string(f.stage));
  const Scale s = scale_for(f.space.parts().front().lo, f.space.parts().back().hi);
  out << "<text x=\"" << num(kMargin) << "\" y=\"20\">stage " << f.stage << ", order " << to_string(f.order)
      << "</text>\n";
  for (const Tower& t : f.nine)
    for (std::size_t j = 0; j < t.height(); ++j)
      for (const Interval& iv : t.levels[j].parts())
        bar(out, s, iv, height - 30 - row * static_cast<double>(j + 1), row, t.label, "", "level");
  out << "</svg>\n";
  return out.str();
}

std::string svg_circle(const Ar6Map& m) {
  std::ostringstream out;
  header(out, 520, "AR6 circle exchange");
  const double cx = 480, cy = 260, r_dom = 200, r_img = 150;
  const double L = to_double(m.circumference());
  auto point = [&](double t, double r) {
    const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * t / L;
    return std::pair{cx + r * std::cos(angle), cy - r * std::sin(angle)};
  };
  auto arc = [&](const Interval& iv, double r, Letter label, const char* role) {
    auto [x0, y0] = point(to_double(iv.lo), r);
    auto [x1, y1] = point(to_double(iv.hi), r);
    const int large = to_double(iv.length()) > L / 2 ? 1 : 0;
    out << "<path class=\"" << role << "\" data-lo=\"" << to_exact_string(iv.lo) << "\" data-hi=\""
        << to_exact_string(iv.hi) << "\" d=\"M " << num(x0) << " " << num(y0) << " A " << num(r) << " " << num(r)
        << " 0 " << large << " 1 " << num(x1) << " " << num(y1) << "\" fill=\"none\" stroke=\"" << kPalette[label]
        << "\" stroke-width=\"14\"/>\n";
  };
  static const char* names[6] = {"a-", "a+", "b-", "b+", "c-", "c+"};
  for (const Ar6Arc& a : m.arcs()) {
    for (const Interval& seg : a.segments) arc(seg, r_dom, a.label, "domain");
    const Rational img = reduce_mod(a.start() + a.offset, m.circumference());
    Rational rest = a.length();
    Rational at = img;
    while (rest > 0) {
      Rational room = m.circumference() - at;
      Rational piece = rest < room ? rest : room;
      arc({at, at + piece}, r_img, a.label, "image");
      rest -= piece;
      at = 0;
    }
    auto [tx, ty] = point(to_double(a.start() + a.length() / 2), r_dom + 24);
    out << "<text x=\"" << num(tx) << "\" y=\"" << num(ty) << "\" text-anchor=\"middle\">" << names[a.label]
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ariet
