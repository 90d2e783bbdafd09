// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#include "eudoxos/ratio.hpp"

#include <algorithm>
#include <numeric>

#include "eudoxos/error.hpp"

namespace eudoxos {

Ratio::Ratio(Magnitude num, Magnitude den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.kind() != den_.kind())
    throw Error(ErrorCode::KindMismatch, "a ratio needs two magnitudes of one kind");
}

Ratio Ratio::naturals(long num, long den) {
  return Ratio(Magnitude::natural(Integer(num)), Magnitude::natural(Integer(den)));
}

std::string_view to_string(CutSide side) noexcept {
  switch (side) {
    case CutSide::Below: return "Below";
    case CutSide::Above: return "Above";
    case CutSide::Boundary: return "Boundary";
    case CutSide::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(ProportionResult::Status status) noexcept {
  switch (status) {
    case ProportionResult::Status::Proportional: return "Proportional";
    case ProportionResult::Status::NotProportional: return "NotProportional";
    case ProportionResult::Status::Undecided: return "Undecided";
  }
  return "?";
}

std::string_view to_string(LessResult result) noexcept {
  switch (result) {
    case LessResult::Less: return "Less";
    case LessResult::NotLess: return "NotLess";
    case LessResult::Undecided: return "Undecided";
  }
  return "?";
}

CutSide cut_member(const Ratio& r, const Integer& m, const Integer& n, const Resolution& res) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidInput, "cut queries need positive m and n");
  switch (compare(kmul(m, r.den()), kmul(n, r.num()), res)) {
    case Order::Less: return CutSide::Below;
    case Order::Equal: return CutSide::Boundary;
    case Order::Greater: return CutSide::Above;
    case Order::Indistinguishable: return CutSide::Unknown;
  }
  return CutSide::Unknown;
}

namespace {

bool in_cut(CutSide side) { return side == CutSide::Below || side == CutSide::Boundary; }

/// Visits reduced fractions m/n with m, n <= bound in order of m + n, then m.
/// Non-reduced pairs repeat the outcome of their reduced form, which comes
/// earlier in this order. Stops when visit returns true.
template <class Visit>
void scan_fractions(std::uint64_t bound, Visit&& visit) {
  for (std::uint64_t s = 2; s <= 2 * bound; ++s) {
    const std::uint64_t m_lo = s > bound ? s - bound : 1;
    const std::uint64_t m_hi = std::min(bound, s - 1);
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
      const std::uint64_t n = s - m;
      if (std::gcd(m, n) != 1) continue;
      if (visit(m, n)) return;
    }
  }
}

Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

/// Exact real value when both terms carry exact values.
std::optional<Rational> exact_value(const Ratio& r) {
  if (r.kind() == KindId::LexPairs) return std::nullopt;
  const RealEnclosure a = r.num().value();
  const RealEnclosure b = r.den().value();
  if (a.is_exact() && b.is_exact()) return *a.exact_value() / *b.exact_value();
  return std::nullopt;
}

template <class Differ>
ProportionResult scan_for_difference(const Ratio& r1, const Ratio& r2, std::uint64_t bound,
                                     const Resolution& res, Differ&& differ) {
  bool undecided = false;
  std::optional<Witness> witness;
  scan_fractions(bound, [&](std::uint64_t m, std::uint64_t n) {
    const CutSide a = cut_member(r1, to_integer(m), to_integer(n), res);
    const CutSide b = cut_member(r2, to_integer(m), to_integer(n), res);
    if (a == CutSide::Unknown || b == CutSide::Unknown) {
      undecided = true;
      return false;
    }
    if (differ(a, b)) {
      witness = Witness{m, n};
      return true;
    }
    return false;
  });
  if (witness) return {ProportionResult::Status::NotProportional, witness};
  if (undecided) return {ProportionResult::Status::Undecided, std::nullopt};
  return {ProportionResult::Status::Proportional, std::nullopt};
}

}  // namespace

ProportionResult eq_E(const Ratio& r1, const Ratio& r2, std::uint64_t bound, const Resolution& res) {
  // Equal exact values give identical outcomes at every m/n.
  const auto v1 = exact_value(r1);
  const auto v2 = exact_value(r2);
  if (v1 && v2 && *v1 == *v2) return {ProportionResult::Status::Proportional, std::nullopt};
  return scan_for_difference(r1, r2, bound, res, [](CutSide a, CutSide b) { return a != b; });
}

ProportionResult eq_L(const Ratio& r1, const Ratio& r2, std::uint64_t bound, const Resolution& res) {
  const auto v1 = exact_value(r1);
  const auto v2 = exact_value(r2);
  if (v1 && v2 && *v1 == *v2) return {ProportionResult::Status::Proportional, std::nullopt};
  return scan_for_difference(r1, r2, bound, res, [](CutSide a, CutSide b) { return in_cut(a) != in_cut(b); });
}

LessResult less_E(const Ratio& r1, const Ratio& r2, std::uint64_t bound, const Resolution& res) {
  bool undecided = false;
  bool found = false;
  scan_fractions(bound, [&](std::uint64_t m, std::uint64_t n) {
    const Integer mm = to_integer(m);
    const Integer nn = to_integer(n);
    const Order second = compare(kmul(mm, r2.num()), kmul(nn, r2.den()), res);
    if (second == Order::Indistinguishable) {
      undecided = true;
      return false;
    }
    if (second != Order::Greater) return false;
    const Order first = compare(kmul(mm, r1.num()), kmul(nn, r1.den()), res);
    if (first == Order::Indistinguishable) {
      undecided = true;
      return false;
    }
    found = first != Order::Greater;
    return found;
  });
  if (found) return LessResult::Less;
  return undecided ? LessResult::Undecided : LessResult::NotLess;
}

Magnitude fourth_proportional(const Ratio& r, const Magnitude& w) {
  if (w.kind() != KindId::Segments) throw Error(ErrorCode::KindMismatch, "fourth proportional is a segment");
  if (const auto v = exact_value(r)) return Magnitude::segment(w.value().scaled(*v));
  if (r.kind() == KindId::Segments) return Magnitude::segment(r.num().value() / r.den().value() * w.value());
  return Magnitude::segment(to_real(r) * w.value());
}

Ratio add_ratio(const Ratio& r1, const Ratio& r2) {
  const Magnitude w = Magnitude::segment(Rational(1));
  return Ratio(add(fourth_proportional(r1, w), fourth_proportional(r2, w)), w);
}

Ratio mul_ratio(const Ratio& r1, const Ratio& r2) {
  const Magnitude w = Magnitude::segment(Rational(1));
  // r1 = u : w and r2 = w : v, where w : v inverts to v : w.
  return Ratio(fourth_proportional(r1, w), fourth_proportional(inverse(r2), w));
}

Ratio inverse(const Ratio& r) { return Ratio(r.den(), r.num()); }

Ratio scale_rational(const Integer& m, const Integer& n, const Ratio& r) {
  return Ratio(kmul(m, r.num()), kmul(n, r.den()));
}

namespace {

Resolution cut_resolution(unsigned depth) {
  Resolution res;
  res.eps = pow2(-static_cast<long>(2 * depth + 64));
  res.max_depth = 2 * depth + 128;
  return res;
}

/// Bracket of the cut boundary on the 2^-depth grid. A grid point that
/// cannot be placed is bracketed by its two neighbours when they can be;
/// otherwise the bisection stops early with a wider (still valid) bracket.
Interval cut_bracket(const Ratio& r, unsigned depth) {
  const Resolution res = cut_resolution(depth);
  const Integer scale = pow_int(Integer(2), depth);
  auto around = [&](const Integer& g) -> std::optional<Interval> {
    const Integer below = g - 1;
    const Integer above = g + 1;
    if (below >= 1 && !in_cut(cut_member(r, below, scale, res))) return std::nullopt;
    if (cut_member(r, above, scale, res) != CutSide::Above) return std::nullopt;
    return Interval(make_rational(below, scale), make_rational(above, scale));
  };
  const Integer one(1);
  // Largest integer in the cut (0 when none) within [lo, hi).
  Integer lo(0);
  Integer hi(1);
  for (;;) {
    const CutSide side = cut_member(r, hi, one, res);
    if (side == CutSide::Boundary) return Interval(Rational(hi));
    if (side == CutSide::Unknown) {
      if (const auto near = around(hi * scale)) return *near;
      hi *= 2;
      continue;
    }
    if (side == CutSide::Above) break;
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const Integer mid = (lo + hi) / 2;
    const CutSide side = cut_member(r, mid, one, res);
    if (side == CutSide::Boundary) return Interval(Rational(mid));
    if (side == CutSide::Unknown) {
      if (const auto near = around(mid * scale)) return *near;
      return Interval(Rational(lo), Rational(hi));
    }
    (side == CutSide::Below ? lo : hi) = mid;
  }
  // Fractions lo_num/2^k in the cut, hi_num/2^k out of it.
  Integer lo_num = lo * scale;
  Integer hi_num = hi * scale;
  while (hi_num - lo_num > 1) {
    const Integer mid = (lo_num + hi_num) / 2;
    const CutSide side = cut_member(r, mid, scale, res);
    if (side == CutSide::Boundary) return Interval(make_rational(mid, scale));
    if (side == CutSide::Unknown) {
      if (const auto near = around(mid)) return *near;
      break;
    }
    (side == CutSide::Below ? lo_num : hi_num) = mid;
  }
  return Interval(make_rational(lo_num, scale), make_rational(hi_num, scale));
}

}  // namespace

RealEnclosure to_real(const Ratio& r) {
  if (!have_ratio(r.num(), r.den()))
    throw Error(ErrorCode::NotArchimedean, "the cut of this pair is empty or all of Q+");
  if (const auto v = exact_value(r)) return RealEnclosure::exact(*v);
  return RealEnclosure::from_raw([r](unsigned depth) { return cut_bracket(r, depth); });
}

}  // namespace eudoxos
