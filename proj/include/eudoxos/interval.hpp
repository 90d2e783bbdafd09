// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <optional>
#include <string>

#include "eudoxos/rational.hpp"

namespace eudoxos {

/// Closed interval [lo, hi] with exact rational endpoints.
class Interval {
 public:
  Interval() = default;
  explicit Interval(const Rational& point) : lo_(point), hi_(point) {}
  Interval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool overlaps(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
  bool certainly_positive() const { return lo_ > 0; }

  /// Outward rounding of both endpoints to a 2^-bits grid.
  Interval rounded(unsigned bits) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws Error{DomainError} if b contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval operator*(const Rational& s, const Interval& a);

/// Directed square root of a non-negative interval on a 2^-bits grid.
Interval sqrt(const Interval& a, unsigned bits);
Interval hull(const Interval& a, const Interval& b);
std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Width of the intersection when the intervals overlap, minus the gap
/// between them otherwise.
Rational overlap_margin(const Interval& a, const Interval& b);

std::string to_string(const Interval& a);

}  // namespace eudoxos
