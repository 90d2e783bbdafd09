// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#include "eudoxos/interval.hpp"

#include <algorithm>

#include "eudoxos/error.hpp"

namespace eudoxos {

Interval::Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw Error(ErrorCode::InvalidInput, "interval with lo > hi");
}

Interval Interval::rounded(unsigned bits) const {
  return Interval(round_down(lo_, bits), round_up(hi_, bits));
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo() - b.hi(), a.hi() - b.lo());
}

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo() >= 0 && b.lo() >= 0) return Interval(a.lo() * b.lo(), a.hi() * b.hi());
  const Rational p[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains(Rational(0))) throw Error(ErrorCode::DomainError, "division by an interval containing zero");
  return a * Interval(1 / b.hi(), 1 / b.lo());
}

Interval operator*(const Rational& s, const Interval& a) {
  if (s >= 0) return Interval(s * a.lo(), s * a.hi());
  return Interval(s * a.hi(), s * a.lo());
}

Interval sqrt(const Interval& a, unsigned bits) {
  if (a.lo() < 0) throw Error(ErrorCode::DomainError, "square root of an interval reaching below zero");
  Rational lo, hi;
  if (!exact_sqrt(a.lo(), lo)) lo = sqrt_down(a.lo(), bits);
  if (!exact_sqrt(a.hi(), hi)) hi = sqrt_up(a.hi(), bits);
  return Interval(lo, hi);
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  const Rational lo = std::max(a.lo(), b.lo());
  const Rational hi = std::min(a.hi(), b.hi());
  if (lo > hi) return std::nullopt;
  return Interval(lo, hi);
}

Rational overlap_margin(const Interval& a, const Interval& b) {
  return std::min(a.hi(), b.hi()) - std::max(a.lo(), b.lo());
}

std::string to_string(const Interval& a) {
  return "[" + to_fraction_string(a.lo()) + ", " + to_fraction_string(a.hi()) + "]";
}

}  // namespace eudoxos
