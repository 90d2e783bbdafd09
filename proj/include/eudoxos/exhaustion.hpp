// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eudoxos/angle.hpp"
#include "eudoxos/enclosure.hpp"
#include "eudoxos/polygon.hpp"

namespace eudoxos {

/// Side count of the polygons used at a doubling depth: 6 * 2^depth.
std::uint64_t sides_at(unsigned depth);

/// Exact-quantity enclosures for the regular polygons inscribed in and
/// circumscribed about a circle of radius r after n doublings.
struct ExhaustionBounds {
  std::uint64_t sides = 0;
  Interval inner_perimeter;
  Interval outer_perimeter;
  Interval inner_area;
  Interval outer_area;

  Rational perimeter_lo() const { return inner_perimeter.lo(); }
  Rational perimeter_hi() const { return outer_perimeter.hi(); }
  Rational area_lo() const { return inner_area.lo(); }
  Rational area_hi() const { return outer_area.hi(); }
};

ExhaustionBounds inscribed_outer_bounds(const Rational& r, unsigned n);

struct PiEnclosure {
  std::uint64_t sides = 0;
  Rational lower;
  Rational upper;
};

/// Certified bounds on pi, nested in depth.
PiEnclosure pi_enclosure(unsigned depth);

/// pi as a real enclosure; at(k) agrees with pi_enclosure(k).
const RealEnclosure& pi_real();

/// Angular sweep part + half_turns straight angles, measured
/// counterclockwise between two directions.
struct Sweep {
  std::optional<Angle> part;
  unsigned half_turns = 0;

  bool empty() const { return !part && half_turns == 0; }
};

/// Counterclockwise sweep from direction `from` to direction `to`. Equal
/// directions give the empty sweep.
Sweep sweep_between(const Point& from, const Point& to);
Sweep sweep_of(const Angle& a);

struct Arc {
  Rational radius;
  Sweep sweep;
};

/// Arc-length enclosure from inscribed chord sums and circumscribed tangent
/// sums. Throws EmptyArc.
RealEnclosure arc_sup_b(const Arc& c);

/// Circular sector, counterclockwise from direction `start` to direction
/// `end`; `full` makes it a disk.
class Sector {
 public:
  static Sector make(const Point& center, const Rational& radius, const Point& start, const Point& end);
  static Sector disk(const Point& center, const Rational& radius);

  const Point& center() const { return center_; }
  const Rational& radius() const { return radius_; }
  const Point& start() const { return start_; }
  const Point& end() const { return end_; }
  bool full() const { return full_; }
  Sweep sweep() const;
  Arc arc() const { return {radius_, sweep()}; }

  /// Convex polygons (as vertex lists) covering the sector, each spanning at
  /// most a quarter turn.
  std::vector<std::vector<Point>> convex_cover() const;

  friend bool operator==(const Sector&, const Sector&) = default;

 private:
  Sector(Point c, Rational r, Point s, Point e, bool full)
      : center_(std::move(c)), radius_(std::move(r)), start_(std::move(s)), end_(std::move(e)), full_(full) {}

  Point center_;
  Rational radius_;
  Point start_;
  Point end_;
  bool full_;
};

/// Area of the sector of radius r swept by s.
RealEnclosure sweep_area(const Sweep& s, const Rational& r);

RealEnclosure sector_content(const Sector& s);

using RegionPart = std::variant<Polygon, Sector>;

/// Essentially-disjoint union of polygons and sectors.
class Region {
 public:
  /// Throws InvalidInput for no parts and NotDisjoint when two parts cannot
  /// be certified to have disjoint interiors.
  explicit Region(std::vector<RegionPart> parts);

  const std::vector<RegionPart>& parts() const { return parts_; }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<RegionPart> parts_;
};

RealEnclosure region_content(const Region& x);
Magnitude region_magnitude(const Region& x);

enum class EtaResult { LeqCertified, GtCertified, Undecided };
std::string_view to_string(EtaResult r) noexcept;

EtaResult region_eta(const Region& x, const Region& y, unsigned depth);

enum class ZetaResult { Equivalent, NotEquivalent, Undecided };
ZetaResult region_zeta(const Region& x, const Region& y, unsigned depth);

/// Lines "polygon: (x1,y1),(x2,y2),..." or
/// "sector: cx,cy,r,start,extent" where start is a direction "dx:dy" and
/// extent is an end direction "dx:dy" or "full". '#' starts a comment.
Region parse_region_file(std::string_view text);

/// One case of the four contradiction branches at a multiplier pair.
struct Xii2Case {
  int branch = 0;  // 1..4
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
};

struct Xii2Record {
  Rational r1;
  Rational r2;
  unsigned depth = 0;
  std::uint64_t bound = 0;
  Rational squares_ratio;
  /// Enclosure of c1/c2 at each depth 0..depth.
  std::vector<Interval> circle_ratio;
  bool ratio_contains_squares = true;
  /// Inscribed polygon ratios enclose s1/s2 at every depth.
  bool polygons_similar = true;
  std::uint64_t cases = 0;
  std::uint64_t refuted_by_squares = 0;
  std::uint64_t refuted_by_enclosure = 0;
  /// Largest depth needed to refute a branch by enclosures.
  unsigned exhaustion_steps = 0;
  /// Branches that hold under the enclosures.
  std::vector<Xii2Case> witnesses;
  /// Branches neither refuted nor certified at the final depth.
  std::vector<Xii2Case> undecided;
  /// Boundary cases n1/n2 = s1/s2: a counterexample would need a defect below
  /// this bound.
  std::vector<Xii2Case> boundary;
  Rational boundary_margin{0};

  bool verified() const { return ratio_contains_squares && polygons_similar && witnesses.empty(); }
};

Xii2Record xii2_verify(const Rational& r1, const Rational& r2, unsigned depth, std::uint64_t bound = 100);

}  // namespace eudoxos
