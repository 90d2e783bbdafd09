// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "eudoxos/interval.hpp"

namespace eudoxos {

/// A computable real given by a depth-indexed family of nested rational
/// intervals: at(k + 1) is contained in at(k), and widths tend to zero for
/// every enclosure built by this library.
///
/// Values are immutable and cheap to copy; the refinement procedure is
/// shared.
class RealEnclosure {
 public:
  using Refiner = std::function<Interval(unsigned depth)>;

  /// Point enclosure of an exact rational.
  static RealEnclosure exact(const Rational& value);

  /// sqrt(q) for q >= 0; exact when q is a rational square.
  static RealEnclosure sqrt(const Rational& q);

  /// Wraps a refiner that is already nested in depth.
  static RealEnclosure from_nested(Refiner refine);

  /// Wraps a refiner whose outputs are valid but not necessarily nested;
  /// at(k) is the intersection of raw(0..k).
  static RealEnclosure from_raw(Refiner raw);

  Interval at(unsigned depth) const;

  const std::optional<Rational>& exact_value() const { return exact_; }
  bool is_exact() const { return exact_.has_value(); }

  /// True for equal exact values, or for equal rational multiples of one
  /// shared refiner.
  bool same_representation(const RealEnclosure& other) const;

  /// this / other when both are exact or both are rational multiples of one
  /// shared refiner.
  std::optional<Rational> ratio_to(const RealEnclosure& other) const;

  /// Refines until the lower bound is positive (up to max_depth).
  bool certainly_positive(unsigned max_depth = 96) const;

  RealEnclosure scaled(const Rational& factor) const;

  friend RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b);
  /// The divisor must be bounded away from zero at some depth.
  friend RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b);

 private:
  RealEnclosure(std::shared_ptr<const Refiner> refine, std::optional<Rational> exact)
      : refine_(refine), exact_(std::move(exact)), base_(std::move(refine)) {}

  std::shared_ptr<const Refiner> refine_;
  std::optional<Rational> exact_;
  // The value is factor_ times the value of base_.
  std::shared_ptr<const Refiner> base_;
  Rational factor_{1};
};

/// Grid used when derived enclosures are rounded outward at a given depth.
unsigned rounding_bits(unsigned depth);

}  // namespace eudoxos
