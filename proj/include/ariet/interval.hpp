#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ariet/rational.hpp"

namespace ariet {

// Half-open [lo, hi).
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool empty() const { return hi <= lo; }
  bool contains(const Rational& x) const { return lo <= x && x < hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  Interval translated(const Rational& by) const { return {lo + by, hi + by}; }
  bool operator==(const Interval&) const = default;
};

std::optional<Interval> intersect(const Interval& x, const Interval& y);

std::string to_string(const Interval& iv);

// Finite union of half-open intervals, kept sorted with touching or
// overlapping parts merged, so components() counts connected components.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);
  IntervalSet(std::initializer_list<Interval> parts)
      : IntervalSet(std::vector<Interval>(parts)) {}

  const std::vector<Interval>& parts() const { return parts_; }
  std::size_t components() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Rational measure() const;
  bool contains(const Rational& x) const;

  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet intersect(const Interval& iv) const;
  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet translated(const Rational& by) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> parts_;
};

// "[p/q, r/s) u [...)", or "{}" when empty.
std::string to_string(const IntervalSet& s);

}  // namespace ariet
