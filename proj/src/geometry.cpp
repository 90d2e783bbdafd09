// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#include "eudoxos/geometry.hpp"

#include <algorithm>
#include <cctype>

#include <gmp.h>

#include "eudoxos/error.hpp"

namespace eudoxos {

int orientation(const Point& o, const Point& a, const Point& b) {
  return sgn(cross(a - o, b - o));
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

bool same_ray(const Point& o, const Point& p, const Point& q) {
  const Point u = p - o;
  const Point v = q - o;
  return cross(u, v) == 0 && dot(u, v) > 0;
}

Point primitive_direction(const Point& v) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), v.x.get_den_mpz_t(), v.y.get_den_mpz_t());
  const Integer x = Rational(v.x * l).get_num();
  const Integer y = Rational(v.y * l).get_num();
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return {Rational(x / g), Rational(y / g)};
}

namespace {

// Projection range of a polygon onto an axis.
std::pair<Rational, Rational> project(const std::vector<Point>& poly, const Point& axis) {
  Rational lo = dot(poly.front(), axis);
  Rational hi = lo;
  for (const auto& p : poly) {
    const Rational v = dot(p, axis);
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return {lo, hi};
}

bool separated_by_edges(const std::vector<Point>& a, const std::vector<Point>& b, const std::vector<Point>& edges_of) {
  for (std::size_t i = 0; i < edges_of.size(); ++i) {
    const Point e = edges_of[(i + 1) % edges_of.size()] - edges_of[i];
    const Point normal{-e.y, e.x};
    if (normal.x == 0 && normal.y == 0) continue;
    const auto [alo, ahi] = project(a, normal);
    const auto [blo, bhi] = project(b, normal);
    if (ahi <= blo || bhi <= alo) return true;
  }
  return false;
}

}  // namespace

bool convex_interiors_disjoint(const std::vector<Point>& a, const std::vector<Point>& b) {
  return separated_by_edges(a, b, a) || separated_by_edges(a, b, b);
}

Rational parse_coordinate(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  if (body.substr(0, 5) == "sqrt(" && !body.empty() && body.back() == ')') {
    const Rational radicand = parse_rational(body.substr(5, body.size() - 6));
    Rational root;
    if (!exact_sqrt(radicand, root))
      throw Error(ErrorCode::IrrationalVertex, "coordinate " + std::string(text) + " is not rational");
    return negative ? Rational(-root) : root;
  }
  return parse_rational(text);
}

std::string to_string(const Point& p) { return "(" + to_fraction_string(p.x) + ", " + to_fraction_string(p.y) + ")"; }

}  // namespace eudoxos
