// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#include "eudoxos/angle.hpp"

#include <gmp.h>

#include "eudoxos/error.hpp"

namespace eudoxos {

namespace {

bool lex_less(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

Interval round_nonneg(const Interval& a, unsigned bits) {
  const Rational lo = a.lo() < 0 ? Rational(0) : a.lo();
  return Interval(lo, a.hi()).rounded(bits);
}

}  // namespace

Angle Angle::from_points(const Point& a, const Point& b, const Point& c, unsigned windings) {
  if (a == b || b == c || a == c) throw Error(ErrorCode::DuplicatePoint, "angle points must be pairwise distinct");
  Point u = a - b;
  Point v = c - b;
  if (cross(u, v) == 0) throw Error(ErrorCode::Collinear, "angle points lie on one line");
  u = primitive_direction(u);
  v = primitive_direction(v);
  if (lex_less(v, u)) std::swap(u, v);
  Angle out;
  out.rep_ = Triple{b + u, b, b + v};
  out.has_part_ = true;
  out.windings_ = windings;
  out.dot_ = eudoxos::dot(u, v);
  const Rational cr = cross(u, v);
  out.cross_sq_ = cr * cr;
  out.norms_sq_ = norm_sq(u) * norm_sq(v);
  return out;
}

Angle Angle::with_cosine(const Rational& cosine, unsigned windings) {
  if (cosine <= -1 || cosine >= 1) throw Error(ErrorCode::DomainError, "cosine must lie in (-1, 1)");
  Angle out;
  out.has_part_ = true;
  out.windings_ = windings;
  out.dot_ = cosine;
  out.cross_sq_ = 1 - cosine * cosine;
  out.norms_sq_ = 1;
  return out;
}

Angle Angle::turns(unsigned windings) {
  if (windings == 0) throw Error(ErrorCode::EmptyArc, "zero turns");
  Angle out;
  out.windings_ = windings;
  return out;
}

Angle Angle::with_windings(unsigned windings) const {
  if (!has_part_ && windings == 0) throw Error(ErrorCode::EmptyArc, "zero turns");
  Angle out = *this;
  out.windings_ = windings;
  return out;
}

Angle angle_from_points(const Point& a, const Point& b, const Point& c) { return Angle::from_points(a, b, c); }

bool angle_equiv(const Triple& t1, const Triple& t2) {
  Angle::from_points(t1[0], t1[1], t1[2]);
  Angle::from_points(t2[0], t2[1], t2[2]);
  if (t1[1] != t2[1]) return false;
  const Point& b = t1[1];
  const bool straight = same_ray(b, t1[0], t2[0]) && same_ray(b, t1[2], t2[2]);
  const bool swapped = same_ray(b, t1[0], t2[2]) && same_ray(b, t1[2], t2[0]);
  return straight || swapped;
}

Order compare_parts(const Angle& a, const Angle& b) {
  if (!a.has_part() || !b.has_part()) throw Error(ErrorCode::InvalidInput, "angle has no part");
  // Larger cosine means smaller angle.
  const int sa = sgn(a.dot());
  const int sb = sgn(b.dot());
  int by_cos;
  if (sa != sb) {
    by_cos = sa < sb ? -1 : 1;
  } else {
    const Rational ka = a.dot() * a.dot() / a.norm_product_sq();
    const Rational kb = b.dot() * b.dot() / b.norm_product_sq();
    by_cos = sa * cmp(ka, kb);
  }
  return by_cos > 0 ? Order::Less : by_cos < 0 ? Order::Greater : Order::Equal;
}

ChordTangent chord_tangent_bounds(const Angle& a, unsigned doublings, const Rational& radius) {
  if (!a.has_part()) throw Error(ErrorCode::EmptyArc, "angle has no part");
  if (radius <= 0) throw Error(ErrorCode::NonPositive, "radius must be positive");
  const long scale = static_cast<long>(mpz_sizeinbase(radius.get_den_mpz_t(), 2));
  const unsigned bits = 2 * doublings + 64 + static_cast<unsigned>(scale);
  const Interval n = sqrt(Interval(a.norm_product_sq()), bits);
  const Interval d(a.dot());
  const Interval c2(a.cross_sq());
  // (N - dot) and (N + dot) without cancellation.
  Interval minus, plus;
  if (a.dot() >= 0) {
    plus = n + d;
    minus = c2 / plus;
  } else {
    minus = n - d;
    plus = c2 / minus;
  }
  const Interval r(radius);
  Interval p = r * sqrt(round_nonneg(Rational(2) * minus / n, bits), bits);
  Interval t = Rational(2) * r * sqrt(round_nonneg(minus / plus, bits), bits);
  p = p.rounded(bits);
  t = t.rounded(bits);
  for (unsigned k = 0; k < doublings; ++k) {
    const Rational tlo = 2 * t.lo() * p.lo() / (t.lo() + p.lo());
    const Rational thi = 2 * t.hi() * p.hi() / (t.hi() + p.hi());
    t = Interval(round_down(tlo, bits), round_up(thi, bits));
    p = Interval(sqrt_down(t.lo() * p.lo(), bits), sqrt_up(t.hi() * p.hi(), bits));
  }
  return {p, t};
}

}  // namespace eudoxos
