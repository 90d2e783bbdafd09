// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <string_view>
#include <vector>

#include "eudoxos/geometry.hpp"
#include "eudoxos/magnitude.hpp"

namespace eudoxos {

/// Simple polygon with exact rational vertices, stored counterclockwise.
class Polygon {
 public:
  /// Throws DegeneratePolygon (fewer than three vertices, repeated
  /// consecutive vertices or zero content) and NotSimple.
  explicit Polygon(std::vector<Point> vertices);

  static Polygon rectangle(const Rational& width, const Rational& height, const Point& origin = {});
  static Polygon triangle(const Point& a, const Point& b, const Point& c);

  const std::vector<Point>& vertices() const { return vertices_; }

  Polygon translated(const Point& offset) const;
  /// Rigid rotation by the angle with cosine a/c and sine b/c, where
  /// a^2 + b^2 = c^2.
  Polygon rotated(const Integer& a, const Integer& b, const Integer& c) const;

  /// Ear-clipping triangulation; the triangles tile the polygon.
  std::vector<Polygon> triangulate() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> vertices_;
};

/// Twice the signed area of a vertex cycle.
Rational shoelace2(const std::vector<Point>& vertices);

Rational content(const Polygon& p);

struct RectangleDims {
  Rational side;
  Rational other;
  friend bool operator==(const RectangleDims&, const RectangleDims&) = default;
};

/// The rectangle with one side l and the content of p. Throws NonPositive
/// if l <= 0.
RectangleDims rectangle_normal_form(const Polygon& p, const Rational& l);

bool rho1_equivalent(const Polygon& p, const Polygon& q);

/// Exact content comparison; never Indistinguishable.
Order compare_content(const Polygon& p, const Polygon& q);

Magnitude polygon_magnitude(const Polygon& p);

/// One "x,y" vertex per non-empty line; '#' starts a comment.
Polygon parse_polygon_file(std::string_view text);

/// "(x1,y1),(x2,y2),..." on a single line.
Polygon parse_polygon_list(std::string_view text);

}  // namespace eudoxos
