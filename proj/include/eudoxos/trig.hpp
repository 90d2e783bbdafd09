// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <string_view>
#include <vector>

#include "eudoxos/angle.hpp"
#include "eudoxos/enclosure.hpp"
#include "eudoxos/ratio.hpp"

namespace eudoxos {

/// d is the radian; e = 2d; rightAngle is a quarter turn.
enum class AngleUnit { d, e, rightAngle };

std::string_view to_string(AngleUnit u) noexcept;

struct AngleMeasure {
  AngleUnit unit = AngleUnit::d;
  RealEnclosure value = RealEnclosure::exact(0);

  AngleMeasure in(AngleUnit target) const;
};

/// Arc length over radius, in unit d. The radius only changes the
/// intermediate computation.
AngleMeasure measure_m(const Angle& a, const Rational& radius = 1);

/// Sector content over the square on the radius, in unit e.
AngleMeasure measure_mu(const Angle& a, const Rational& radius = 1);

RealEnclosure to_degrees(const AngleMeasure& m);

Magnitude angle_magnitude(const Angle& a);

struct UnitRelationReport {
  unsigned depth = 0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Smallest overlap width between m and 2 mu over the sample.
  Rational min_overlap;
  bool passed() const { return cases > 0 && failures == 0; }
};

/// Checks m = 2 mu on a fixed sample of angles at the given depth.
UnitRelationReport unit_relation_check(unsigned depth);

/// Opposite over hypotenuse from the exact foot of a perpendicular. Throws
/// NotAcute.
RealEnclosure sin_geometric(const Angle& a);
Ratio sin_ratio(const Angle& a);

/// The integral of 1/sqrt(1 - t^2) from 0 to x, for 0 < x < 1, with
/// 2^depth Riemann cells. Nested in depth. Throws DomainError.
Interval asin_integral(const Rational& x, unsigned depth);
/// Same, at x = sqrt(x_sq).
Interval asin_integral_of_sqrt(const Rational& x_sq, unsigned depth);
RealEnclosure asin_enclosure(const Rational& x);

/// Analytic sine for x >= 0, width about 2^-depth. Throws DomainError for
/// negative arguments.
Interval sin_analytic(const Rational& x, unsigned depth);
Interval sin_analytic(const Interval& x, unsigned depth);
Interval sin_analytic(const RealEnclosure& x, unsigned depth);

Interval cos_analytic(const Rational& x, unsigned depth);
Interval cos_analytic(const Interval& x, unsigned depth);
Interval cos_analytic(const RealEnclosure& x, unsigned depth);

/// Throws DomainError when the cosine enclosure contains zero.
Interval tan_analytic(const Interval& x, unsigned depth);

struct LimitSample {
  Interval sin;
  Interval measure;
  Interval ratio;
};

struct LimitReport {
  unsigned depth = 0;
  std::vector<LimitSample> samples;
  /// Lower ratio bounds increase strictly along the sequence.
  bool increasing = true;
  /// Every ratio enclosure meets (0, 1].
  bool within_unit = true;
  bool passed() const { return !samples.empty() && increasing && within_unit; }
};

/// Sin over m for each angle, from sin_geometric and measure_m only.
LimitReport celebrated_limit_check(const std::vector<Angle>& angles, unsigned depth);

/// The 45 degree angle followed by `halvings` successive near-halvings, each
/// a rational triple at the origin.
std::vector<Angle> halving_sequence(unsigned halvings);

}  // namespace eudoxos
