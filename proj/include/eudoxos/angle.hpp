// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <array>
#include <optional>

#include "eudoxos/geometry.hpp"
#include "eudoxos/interval.hpp"
#include "eudoxos/magnitude.hpp"

namespace eudoxos {

using Triple = std::array<Point, 3>;

/// An angle strictly between zero and a straight angle plus a number of full
/// turns. The part is either a class of point triples (normalized so that
/// both arms are primitive integer vectors, in lexicographic order) or an
/// angle given by a rational cosine.
class Angle {
 public:
  /// Throws DuplicatePoint or Collinear.
  static Angle from_points(const Point& a, const Point& b, const Point& c, unsigned windings = 0);
  /// The angle in (0, pi) with the given cosine, -1 < cosine < 1.
  static Angle with_cosine(const Rational& cosine, unsigned windings = 0);
  /// windings >= 1 full turns and no part.
  static Angle turns(unsigned windings);

  bool has_part() const { return has_part_; }
  /// Canonical triple, absent for cosine-given angles and pure turns.
  const std::optional<Triple>& rep() const { return rep_; }
  unsigned windings() const { return windings_; }
  Angle with_windings(unsigned windings) const;

  /// Invariants of the part: u.v, (u x v)^2 and |u|^2 |v|^2 for arms u, v.
  const Rational& dot() const { return dot_; }
  const Rational& cross_sq() const { return cross_sq_; }
  const Rational& norm_product_sq() const { return norms_sq_; }

  bool is_acute() const { return has_part_ && windings_ == 0 && dot_ > 0; }
  bool is_right() const { return has_part_ && windings_ == 0 && dot_ == 0; }

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  Angle() = default;

  std::optional<Triple> rep_;
  bool has_part_ = false;
  unsigned windings_ = 0;
  Rational dot_{0};
  Rational cross_sq_{0};
  Rational norms_sq_{0};
};

Angle angle_from_points(const Point& a, const Point& b, const Point& c);

/// Same vertex, and the arms lie on the same rays (possibly swapped).
/// Throws like angle_from_points on invalid triples.
bool angle_equiv(const Triple& t1, const Triple& t2);

/// Exact comparison of the parts by their cosines; windings are ignored.
Order compare_parts(const Angle& a, const Angle& b);

/// Inscribed chord sum and circumscribed tangent sum over the part of the
/// angle, on a circle of the given radius, after the given number of
/// doublings (2^doublings pieces each).
struct ChordTangent {
  Interval chords;
  Interval tangents;
};

ChordTangent chord_tangent_bounds(const Angle& a, unsigned doublings, const Rational& radius = 1);

}  // namespace eudoxos
