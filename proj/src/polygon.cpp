// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#include "eudoxos/polygon.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "eudoxos/error.hpp"

namespace eudoxos {

namespace {

void check_simple(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& c = v[j];
      const Point& d = v[(j + 1) % n];
      const bool next = j == i + 1;
      const bool prev = (j + 1) % n == i;
      if (next) {
        // Edges a-b and b-d meet at b; they may not fold back onto each other.
        if (on_segment(a, b, d) || on_segment(b, d, a)) throw Error(ErrorCode::NotSimple, "edges overlap");
      } else if (prev) {
        if (on_segment(c, a, b) || on_segment(a, b, c)) throw Error(ErrorCode::NotSimple, "edges overlap");
      } else if (segments_intersect(a, b, c, d)) {
        throw Error(ErrorCode::NotSimple, "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
      }
    }
  }
}

bool inside_or_on_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  return orientation(a, b, p) >= 0 && orientation(b, c, p) >= 0 && orientation(c, a, p) >= 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Point parse_vertex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
    throw Error(ErrorCode::InvalidInput, "vertex '" + std::string(text) + "' is not of the form x,y");
  return {parse_coordinate(text.substr(0, comma)), parse_coordinate(text.substr(comma + 1))};
}

}  // namespace

Rational shoelace2(const std::vector<Point>& vertices) {
  Rational twice = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) twice += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  return twice;
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error(ErrorCode::DegeneratePolygon, "a polygon needs at least three vertices");
  for (std::size_t i = 0; i < n; ++i)
    if (vertices_[i] == vertices_[(i + 1) % n]) throw Error(ErrorCode::DegeneratePolygon, "repeated vertex");
  bool flat = true;
  for (std::size_t i = 2; i < n && flat; ++i) flat = orientation(vertices_[0], vertices_[1], vertices_[i]) == 0;
  if (flat) throw Error(ErrorCode::DegeneratePolygon, "all vertices are collinear");
  check_simple(vertices_);
  const Rational twice = shoelace2(vertices_);
  if (twice == 0) throw Error(ErrorCode::DegeneratePolygon, "polygon has zero content");
  if (twice < 0) std::reverse(vertices_.begin(), vertices_.end());
}

Polygon Polygon::rectangle(const Rational& width, const Rational& height, const Point& origin) {
  return Polygon({origin, origin + Point{width, 0}, origin + Point{width, height}, origin + Point{0, height}});
}

Polygon Polygon::triangle(const Point& a, const Point& b, const Point& c) { return Polygon({a, b, c}); }

Polygon Polygon::translated(const Point& offset) const {
  std::vector<Point> out;
  out.reserve(vertices_.size());
  for (const auto& p : vertices_) out.push_back(p + offset);
  return Polygon(std::move(out));
}

Polygon Polygon::rotated(const Integer& a, const Integer& b, const Integer& c) const {
  if (c == 0 || a * a + b * b != c * c) throw Error(ErrorCode::InvalidInput, "not a Pythagorean triple");
  const Rational cs = make_rational(a, c);
  const Rational sn = make_rational(b, c);
  std::vector<Point> out;
  out.reserve(vertices_.size());
  for (const auto& p : vertices_) out.push_back({cs * p.x - sn * p.y, sn * p.x + cs * p.y});
  return Polygon(std::move(out));
}

std::vector<Polygon> Polygon::triangulate() const {
  std::vector<Point> ring = vertices_;
  for (bool changed = true; changed && ring.size() > 3;) {
    changed = false;
    for (std::size_t i = 0; i < ring.size() && ring.size() > 3; ++i) {
      const std::size_t n = ring.size();
      if (orientation(ring[(i + n - 1) % n], ring[i], ring[(i + 1) % n]) == 0) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        --i;
      }
    }
  }
  std::vector<Polygon> out;
  while (ring.size() > 3) {
    const std::size_t n = ring.size();
    bool clipped = false;
    for (std::size_t i = 0; i < n && !clipped; ++i) {
      const Point& a = ring[(i + n - 1) % n];
      const Point& b = ring[i];
      const Point& c = ring[(i + 1) % n];
      if (orientation(a, b, c) <= 0) continue;
      bool empty = true;
      for (std::size_t j = 0; j < n && empty; ++j) {
        if (j == i || j == (i + 1) % n || j == (i + n - 1) % n) continue;
        if (inside_or_on_triangle(a, b, c, ring[j])) empty = false;
      }
      if (!empty) continue;
      out.push_back(Polygon({a, b, c}));
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
    }
    if (!clipped) throw Error(ErrorCode::NotSimple, "no ear found");
    // Removing an ear can leave a straight vertex behind.
    for (std::size_t i = 0; ring.size() > 3 && i < ring.size(); ++i) {
      const std::size_t m = ring.size();
      if (orientation(ring[(i + m - 1) % m], ring[i], ring[(i + 1) % m]) == 0) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        i = static_cast<std::size_t>(-1);
      }
    }
  }
  out.push_back(Polygon(ring));
  return out;
}

Rational content(const Polygon& p) { return shoelace2(p.vertices()) / 2; }

RectangleDims rectangle_normal_form(const Polygon& p, const Rational& l) {
  if (l <= 0) throw Error(ErrorCode::NonPositive, "side must be positive");
  return {l, content(p) / l};
}

bool rho1_equivalent(const Polygon& p, const Polygon& q) { return content(p) == content(q); }

Order compare_content(const Polygon& p, const Polygon& q) {
  const int c = cmp(content(p), content(q));
  return c < 0 ? Order::Less : c > 0 ? Order::Greater : Order::Equal;
}

Magnitude polygon_magnitude(const Polygon& p) { return Magnitude::polygon_class(content(p)); }

Polygon parse_polygon_file(std::string_view text) {
  std::vector<Point> vertices;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    vertices.push_back(parse_vertex(view));
  }
  return Polygon(std::move(vertices));
}

Polygon parse_polygon_list(std::string_view text) {
  std::vector<Point> vertices;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    if (rest.front() != '(') throw Error(ErrorCode::InvalidInput, "expected '(' in vertex list");
    std::size_t close = 1;
    for (int depth = 1; close < rest.size(); ++close) {
      if (rest[close] == '(') ++depth;
      if (rest[close] == ')' && --depth == 0) break;
    }
    if (close == rest.size()) throw Error(ErrorCode::InvalidInput, "unbalanced parenthesis");
    vertices.push_back(parse_vertex(rest.substr(1, close - 1)));
    rest = trim(rest.substr(close + 1));
    if (!rest.empty()) {
      if (rest.front() != ',') throw Error(ErrorCode::InvalidInput, "expected ',' between vertices");
      rest = trim(rest.substr(1));
    }
  }
  return Polygon(std::move(vertices));
}

}  // namespace eudoxos
