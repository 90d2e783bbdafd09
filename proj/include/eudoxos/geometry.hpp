// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eudoxos/rational.hpp"

namespace eudoxos {

struct Point {
  Rational x{0};
  Rational y{0};
  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

inline Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rational norm_sq(const Point& u) { return dot(u, u); }

/// Sign of the turn o -> a -> b: +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const Point& o, const Point& a, const Point& b);

/// p lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& p);

/// The closed segments share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// p and q point the same way from o (q = o + t (p - o) for some t > 0).
bool same_ray(const Point& o, const Point& p, const Point& q);

/// The primitive integer vector on the ray of a nonzero v.
Point primitive_direction(const Point& v);

/// Convex polygons (vertices in order) whose interiors are separated by a
/// line through one of their edges.
bool convex_interiors_disjoint(const std::vector<Point>& a, const std::vector<Point>& b);

/// Exact coordinate: "p/q", or "sqrt(p/q)" when p/q is a rational square.
/// Throws Error{IrrationalVertex} for other square roots.
Rational parse_coordinate(std::string_view text);

std::string to_string(const Point& p);

}  // namespace eudoxos
