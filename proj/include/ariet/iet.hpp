#pragma once

// Exact geometric models: the nine-interval exchange on three disjoint line
// intervals Omega, Omega', Omega'' and the six-interval circle exchange.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ariet/gasket.hpp"
#include "ariet/interval.hpp"
#include "ariet/words.hpp"

namespace ariet {

enum class BaseOrder : std::uint8_t { First, Second, Third };

struct OrderTag {
  BaseOrder base = BaseOrder::First;
  bool reversed = false;
  bool operator==(const OrderTag&) const = default;
};

std::array<OrderTag, 6> all_orders();
std::string to_string(OrderTag order);  // "first", "reversed-second", ...
OrderTag parse_order(std::string_view text);

// Indices of Omega, Omega', Omega'' in Ar9Map::omegas().
enum OmegaIndex : int { kOmega = 0, kOmegaPrime = 1, kOmegaSecond = 2 };

// OmegaIndex values in left-to-right display order.
std::array<int, 3> display_sequence(OrderTag order);

// A9 letters of the domain pieces of one Omega, left to right.
std::vector<Letter> omega_domain_labels(int omega, OrderTag order);

class Ar9Map {
 public:
  const Triple& triple() const { return triple_; }
  OrderTag order() const { return order_; }
  const std::array<Interval, 3>& omegas() const { return omegas_; }
  // Piece I_i and image TI_i for A9 letter index 0..8.
  const Interval& piece(Letter i) const { return domain_[i]; }
  const Interval& image(Letter i) const { return image_[i]; }
  Rational offset(Letter i) const { return image_[i].lo - domain_[i].lo; }

  std::optional<Letter> piece_of(const Rational& x) const;
  IntervalSet space() const;            // Omega u Omega' u Omega''
  IntervalSet letter_set(Letter a3) const;  // J_a, J_b or J_c at this stage
  std::vector<Rational> breakpoints() const;

  bool operator==(const Ar9Map&) const = default;

 private:
  friend Ar9Map layout_ar9(const Triple&, OrderTag, const std::array<Rational, 3>&);
  Triple triple_;
  OrderTag order_;
  std::array<Interval, 3> omegas_;
  std::array<Interval, 9> domain_;
  std::array<Interval, 9> image_;
  std::vector<std::pair<Rational, Letter>> by_left_;  // sorted piece lookup
};

// Places Omega, Omega', Omega'' with the given left endpoints (indexed by
// OmegaIndex) and cuts them per the order. Throws Inadmissible.
Ar9Map layout_ar9(const Triple& t, OrderTag order, const std::array<Rational, 3>& omega_left);

// Omegas side by side in display order from `origin`, separated by the two gaps.
Ar9Map build_ar9(const Triple& t, OrderTag order,
                 const std::pair<Rational, Rational>& gaps = {Rational(0), Rational(0)},
                 const Rational& origin = Rational(0));

// (T x, letter of the piece containing x). Throws OutOfDomain.
std::pair<Rational, Letter> ar9_apply(const Ar9Map& m, const Rational& x);

enum class Partition : std::uint8_t { Nine, Three };

Word trajectory(const Ar9Map& m, Rational x, std::size_t n, Partition partition = Partition::Nine);

// Maps s in [0, |X9|) onto X9 by walking the omegas left to right; used to
// sample points uniformly with respect to length.
Rational point_at(const Ar9Map& m, const Rational& s);

struct Ar6Arc {
  Letter label;                   // A6 letter 0..5
  std::vector<Interval> segments; // one, or two when the arc wraps through 0
  Rational offset;                // translation mod the circumference

  Rational length() const;
  Rational start() const;         // first point of the arc in circle order
};

class Ar6Map {
 public:
  Ar6Map(Triple t, std::array<Ar6Arc, 6> arcs);

  const Triple& triple() const { return triple_; }
  const Rational& circumference() const { return circumference_; }
  const std::array<Ar6Arc, 6>& arcs() const { return arcs_; }

  std::optional<Letter> arc_of(const Rational& x) const;
  std::vector<Rational> breakpoints() const;

 private:
  Triple triple_;
  Rational circumference_;
  std::array<Ar6Arc, 6> arcs_;
};

Rational reduce_mod(const Rational& x, const Rational& modulus);

// (T x, arc label); x is reduced into [0, L) first.
std::pair<Rational, Letter> ar6_apply(const Ar6Map& m, const Rational& x);

// Arcs a-, a+, b-, b+, c-, c+ laid out from 0, each pair swapped, then a
// half turn. Throws Inadmissible.
Ar6Map build_ar6_canonical(const Triple& t);

// Gluing map phi'_6: X9 -> circle of length 2(a+b+c), right end of Omega to
// left end of Omega', Omega' to Omega'', Omega'' back to Omega; the circle
// origin is the left end of Omega. Non-reversed orders only.
Rational glue_point(const Ar9Map& m, const Rational& x);

// Circle exchange induced by the gluing. Throws StructureViolation if the
// glued pieces do not assemble into six arcs with a single translation each.
Ar6Map glue_to_ar6(const Ar9Map& m);

// A rotation rho with b's arcs = a's arcs + rho (same labels, lengths and
// translations), if one exists.
std::optional<Rational> rotation_between(const Ar6Map& a, const Ar6Map& b);

}  // namespace ariet
