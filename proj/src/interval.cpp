#include "ariet/interval.hpp"

#include <algorithm>

namespace ariet {

std::optional<Interval> intersect(const Interval& x, const Interval& y) {
  Interval out{x.lo < y.lo ? y.lo : x.lo, x.hi < y.hi ? x.hi : y.hi};
  if (out.empty()) return std::nullopt;
  return out;
}

std::string to_string(const Interval& iv) {
  return "[" + to_exact_string(iv.lo) + ", " + to_exact_string(iv.hi) + ")";
}

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& iv) { return iv.empty(); });
  std::sort(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (Interval& iv : parts) {
    if (!parts_.empty() && iv.lo <= parts_.back().hi) {
      if (parts_.back().hi < iv.hi) parts_.back().hi = iv.hi;
    } else {
      parts_.push_back(std::move(iv));
    }
  }
}

Rational IntervalSet::measure() const {
  Rational total = 0;
  for (const Interval& iv : parts_) total += iv.length();
  return total;
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == parts_.begin()) return false;
  return std::prev(it)->contains(x);
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    if (auto common = ariet::intersect(parts_[i], other.parts_[j])) out.push_back(*common);
    if (parts_[i].hi < other.parts_[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::intersect(const Interval& iv) const {
  return intersect(IntervalSet{iv});
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::translated(const Rational& by) const {
  IntervalSet out;
  out.parts_.reserve(parts_.size());
  for (const Interval& iv : parts_) out.parts_.push_back(iv.translated(by));
  return out;
}

}  // namespace ariet

namespace ariet {

std::string to_string(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const Interval& iv : s.parts()) {
    if (!out.empty()) out += " u ";
    out += to_string(iv);
  }
  return out;
}

}  // namespace ariet
