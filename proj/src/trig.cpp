// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#include "eudoxos/trig.hpp"

#include <gmp.h>

#include <algorithm>

#include "eudoxos/error.hpp"
#include "eudoxos/exhaustion.hpp"

namespace eudoxos {

namespace {

unsigned bit_length(const Integer& z) { return static_cast<unsigned>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

// Sum over i in [first, last] of floor or ceil of sqrt(2^(2 frac) / D_i),
// D_i = base - i^2 pp.
Integer fixed_point_sum(const Integer& base, const Integer& pp, unsigned long first, unsigned long last,
                        unsigned frac, bool round_up) {
  mpz_t scale, d, quot, root, sum;
  mpz_inits(scale, d, quot, root, sum, nullptr);
  mpz_set_ui(scale, 1);
  mpz_mul_2exp(scale, scale, 2 * frac);
  for (unsigned long i = first; i <= last; ++i) {
    mpz_mul_ui(d, pp.get_mpz_t(), i);
    mpz_mul_ui(d, d, i);
    mpz_sub(d, base.get_mpz_t(), d);
    if (round_up) {
      mpz_cdiv_q(quot, scale, d);
      int exact = mpz_root(root, quot, 2);
      if (!exact) mpz_add_ui(root, root, 1);
    } else {
      mpz_fdiv_q(quot, scale, d);
      mpz_sqrt(root, quot);
    }
    mpz_add(sum, sum, root);
  }
  Integer out(sum);
  mpz_clears(scale, d, quot, root, sum, nullptr);
  return out;
}

// Left sum at X.lo and right sum at X.hi of 1/sqrt(1 - t^2) over 2^cells
// equal pieces. The integrand is increasing, so the sums bracket the
// integral over every x in X.
Interval riemann(const Interval& x, unsigned cells) {
  if (x.lo() < 0 || x.hi() >= 1) throw Error(ErrorCode::DomainError, "argument outside [0, 1)");
  const unsigned long n = 1UL << cells;
  const unsigned frac = 2 * cells + 32 + bit_length(x.hi().get_num());
  const Rational unit = pow2(-static_cast<long>(frac));
  auto side = [&](const Rational& at, bool upper) {
    if (at == 0) return Rational(0);
    const Integer& p = at.get_num();
    const Integer& q = at.get_den();
    const Integer nq = Integer(n) * q;
    const Integer sum = fixed_point_sum(nq * nq, p * p, upper ? 1 : 0, upper ? n : n - 1, frac, upper);
    return Rational(Rational(p * sum) * unit);
  };
  return Interval(side(x.lo(), false), side(x.hi(), true));
}

Interval sqrt_interval(const Rational& q, unsigned bits) {
  Rational root;
  if (exact_sqrt(q, root)) return Interval(root);
  return Interval(sqrt_down(q, bits), sqrt_up(q, bits));
}

Interval half_pi(unsigned depth) {
  const Interval p = pi_real().at(depth);
  return Interval(p.lo() / 2, p.hi() / 2);
}

// asin(sqrt(x_sq)) from one grid, not intersected across depths.
Interval asin_sqrt_raw(const Rational& x_sq, unsigned cells) {
  if (x_sq * 2 <= 1) return riemann(sqrt_interval(x_sq, cells + 40), cells);
  const Interval rest = riemann(sqrt_interval(1 - x_sq, cells + 40), cells);
  const Interval h = half_pi(cells + 2);
  return Interval(h.lo() - rest.hi(), h.hi() - rest.lo());
}

Interval asin_raw(const Rational& x, unsigned cells) {
  if (x * x * 2 <= 1) return riemann(Interval(x), cells);
  return asin_sqrt_raw(x * x, cells);
}

void check_unit_open(const Rational& x) {
  if (x <= 0 || x >= 1) throw Error(ErrorCode::DomainError, "asin argument must lie in (0, 1)");
}

// [a, b] with asin(a) <= t <= asin(b), for 0 <= t <= pi/2.
Interval sin_bracket(const Rational& t, unsigned depth) {
  if (t == 0) return Interval(Rational(0));
  Rational a = 0;
  Rational b = 1;
  // +1: asin(y) < t, -1: asin(y) > t, 0: not separated at this grid.
  auto probe = [&](const Rational& y, unsigned cells) {
    const Interval s = asin_raw(y, cells);
    return s.hi() < t ? 1 : s.lo() > t ? -1 : 0;
  };
  const Rational target = pow2(-static_cast<long>(depth + 2));
  for (unsigned step = 0; b - a > target; ++step) {
    const unsigned cells = std::min(step, depth) + 4;
    const Rational mid = (a + b) / 2;
    const int side = probe(mid, cells);
    if (side > 0) {
      a = mid;
      continue;
    }
    if (side < 0) {
      b = mid;
      continue;
    }
    // asin(mid) is close to t: probe either side of mid.
    bool moved = false;
    for (unsigned extra : {0u, 3u}) {
      const Rational delta = (b - a) / 8;
      if (probe(mid - delta, cells + extra) > 0) {
        a = mid - delta;
        moved = true;
      }
      if (probe(mid + delta, cells + extra) < 0) {
        b = mid + delta;
        moved = true;
      }
      if (moved) break;
    }
    if (!moved) break;
  }
  return Interval(a, b);
}

// Lower and upper bounds of sin t for t within about [-pi/2, pi/2].
struct QuarterBounds {
  Interval half;  // pi/2
  unsigned depth;

  Rational lo(const Rational& t) const {
    if (t >= 0) return sin_bracket(std::min(t, half.lo()), depth).lo();
    if (-t >= half.lo()) return -1;
    return -sin_bracket(-t, depth).hi();
  }
  Rational hi(const Rational& t) const {
    if (t >= 0) return t >= half.lo() ? Rational(1) : sin_bracket(t, depth).hi();
    return -sin_bracket(std::min(Rational(-t), half.lo()), depth).lo();
  }
};

Interval sin_point(const Rational& q, unsigned depth) {
  const Interval pi = pi_real().at(depth + 8);
  const Interval two_pi = Rational(2) * pi;
  const Interval half(pi.lo() / 2, pi.hi() / 2);
  const Interval three_half(3 * pi.lo() / 2, 3 * pi.hi() / 2);
  const QuarterBounds qb{half, depth};

  const Integer turns = floor_of(q / two_pi.midpoint());
  Interval v(q);
  if (turns > 0) v = Interval(q - Rational(turns) * two_pi.hi(), q - Rational(turns) * two_pi.lo());

  if (v.hi() <= half.lo()) return Interval(qb.lo(v.lo()), qb.hi(v.hi()));
  if (v.lo() <= half.hi()) {
    const Rational dist = std::max(Rational(half.hi() - v.lo()), Rational(v.hi() - half.lo()));
    return Interval(qb.lo(half.lo() - dist), 1);
  }
  if (v.hi() <= three_half.lo()) {
    const Interval w(pi.lo() - v.hi(), pi.hi() - v.lo());
    return Interval(qb.lo(w.lo()), qb.hi(w.hi()));
  }
  if (v.lo() <= three_half.hi()) {
    const Rational dist = std::max(Rational(three_half.hi() - v.lo()), Rational(v.hi() - three_half.lo()));
    return Interval(-1, -qb.lo(half.lo() - dist));
  }
  const Interval w(v.lo() - two_pi.hi(), v.hi() - two_pi.lo());
  return Interval(qb.lo(w.lo()), qb.hi(w.hi()));
}

bool meets_critical(const Interval& x, const Interval& point, const Interval& period) {
  const Integer first = floor_of(x.lo() / period.hi()) - 1;
  const Integer last = floor_of(x.hi() / period.lo()) + 1;
  for (Integer j = std::max(first, Integer(0)); j <= last; ++j) {
    const Interval c(point.lo() + Rational(j) * period.lo(), point.hi() + Rational(j) * period.hi());
    if (c.overlaps(x)) return true;
  }
  return false;
}

RealEnclosure sweep_measure(const Angle& a, const Rational& radius) {
  return arc_sup_b({radius, sweep_of(a)}).scaled(1 / radius);
}

Rational foot_sin_sq(const Angle& a) {
  if (!a.rep()) return a.cross_sq() / a.norm_product_sq();
  const Point& pa = (*a.rep())[0];
  const Point& b = (*a.rep())[1];
  const Point& c = (*a.rep())[2];
  const Point u = pa - b;
  const Point v = c - b;
  const Point foot = b + (dot(u, v) / norm_sq(v)) * v;
  return norm_sq(pa - foot) / norm_sq(u);
}

}  // namespace

std::string_view to_string(AngleUnit u) noexcept {
  switch (u) {
    case AngleUnit::d: return "d";
    case AngleUnit::e: return "e";
    case AngleUnit::rightAngle: return "rightAngle";
  }
  return "?";
}

AngleMeasure AngleMeasure::in(AngleUnit target) const {
  if (target == unit) return *this;
  // Express in d first.
  RealEnclosure d = value;
  if (unit == AngleUnit::e) d = value.scaled(2);
  if (unit == AngleUnit::rightAngle) d = value * pi_real().scaled(Rational(1, 2));
  switch (target) {
    case AngleUnit::d: return {AngleUnit::d, d};
    case AngleUnit::e: return {AngleUnit::e, d.scaled(Rational(1, 2))};
    case AngleUnit::rightAngle: return {AngleUnit::rightAngle, d / pi_real().scaled(Rational(1, 2))};
  }
  return *this;
}

AngleMeasure measure_m(const Angle& a, const Rational& radius) {
  return {AngleUnit::d, sweep_measure(a, radius)};
}

AngleMeasure measure_mu(const Angle& a, const Rational& radius) {
  return {AngleUnit::e, sweep_area(sweep_of(a), radius).scaled(1 / (radius * radius))};
}

RealEnclosure to_degrees(const AngleMeasure& m) {
  return m.in(AngleUnit::rightAngle).value.scaled(90);
}

Magnitude angle_magnitude(const Angle& a) { return Magnitude::angle(measure_m(a).value); }

UnitRelationReport unit_relation_check(unsigned depth) {
  const Point o{};
  const std::vector<Angle> sample{
      angle_from_points({1, 0}, o, {0, 1}),
      angle_from_points({1, 0}, o, {1, 1}),
      angle_from_points({5, 0}, o, {3, 4}),
      Angle::with_cosine(Rational(1, 2)),
      angle_from_points({1, 0}, o, {-1, 1}),
      angle_from_points({1, 0}, o, {100, 1}),
      angle_from_points({2, 1}, {1, 1}, {-3, 7}),
      Angle::from_points({1, 0}, o, {0, 1}, 1),
      Angle::turns(1),
  };
  UnitRelationReport rep;
  rep.depth = depth;
  const Rational tolerance = pow2(-static_cast<long>(depth));
  bool first = true;
  for (const auto& a : sample) {
    ++rep.cases;
    const Interval m = measure_m(a).value.at(depth);
    const Interval mu = measure_mu(a).value.at(depth);
    const Interval twice = Rational(2) * mu;
    const Rational overlap = overlap_margin(m, twice);
    const Interval half_m(m.lo() / 2 - tolerance, m.hi() / 2 + tolerance);
    if (overlap < 0 || !half_m.contains(mu)) ++rep.failures;
    if (first || overlap < rep.min_overlap) rep.min_overlap = overlap;
    first = false;
  }
  return rep;
}

RealEnclosure sin_geometric(const Angle& a) {
  if (!a.is_acute()) throw Error(ErrorCode::NotAcute, "Sin is defined here for acute angles only");
  return RealEnclosure::sqrt(foot_sin_sq(a));
}

Ratio sin_ratio(const Angle& a) {
  if (!a.is_acute()) throw Error(ErrorCode::NotAcute, "Sin is defined here for acute angles only");
  if (!a.rep()) return Ratio(Magnitude::segment(RealEnclosure::sqrt(foot_sin_sq(a))), Magnitude::segment(Rational(1)));
  const Point& pa = (*a.rep())[0];
  const Point& b = (*a.rep())[1];
  const Point& c = (*a.rep())[2];
  const Point v = c - b;
  const Point foot = b + (dot(pa - b, v) / norm_sq(v)) * v;
  return Ratio(Magnitude::segment(RealEnclosure::sqrt(norm_sq(pa - foot))),
               Magnitude::segment(RealEnclosure::sqrt(norm_sq(pa - b))));
}

Interval asin_integral(const Rational& x, unsigned depth) {
  check_unit_open(x);
  Interval acc = asin_raw(x, 0);
  for (unsigned k = 1; k <= depth; ++k) {
    const Interval next = asin_raw(x, k);
    acc = Interval(std::max(acc.lo(), next.lo()), std::min(acc.hi(), next.hi()));
  }
  return acc;
}

Interval asin_integral_of_sqrt(const Rational& x_sq, unsigned depth) {
  check_unit_open(x_sq);
  Interval acc = asin_sqrt_raw(x_sq, 0);
  for (unsigned k = 1; k <= depth; ++k) {
    const Interval next = asin_sqrt_raw(x_sq, k);
    acc = Interval(std::max(acc.lo(), next.lo()), std::min(acc.hi(), next.hi()));
  }
  return acc;
}

RealEnclosure asin_enclosure(const Rational& x) {
  check_unit_open(x);
  return RealEnclosure::from_raw([x](unsigned k) { return asin_raw(x, k); });
}

Interval sin_analytic(const Rational& x, unsigned depth) { return sin_analytic(Interval(x), depth); }

Interval sin_analytic(const Interval& x, unsigned depth) {
  if (x.lo() < 0) throw Error(ErrorCode::DomainError, "analytic sine is defined here for x >= 0");
  if (x.is_point()) return sin_point(x.lo(), depth);
  const Interval a = sin_point(x.lo(), depth);
  const Interval b = sin_point(x.hi(), depth);
  Rational lo = std::min(a.lo(), b.lo());
  Rational hi = std::max(a.hi(), b.hi());
  const Interval pi = pi_real().at(depth + 8);
  const Interval two_pi = Rational(2) * pi;
  if (meets_critical(x, Interval(pi.lo() / 2, pi.hi() / 2), two_pi)) hi = 1;
  if (meets_critical(x, Interval(3 * pi.lo() / 2, 3 * pi.hi() / 2), two_pi)) lo = -1;
  return Interval(lo, hi);
}

Interval sin_analytic(const RealEnclosure& x, unsigned depth) { return sin_analytic(x.at(depth), depth); }

Interval cos_analytic(const Rational& x, unsigned depth) { return cos_analytic(Interval(x), depth); }

Interval cos_analytic(const Interval& x, unsigned depth) {
  if (x.lo() < 0) throw Error(ErrorCode::DomainError, "analytic cosine is defined here for x >= 0");
  return sin_analytic(x + half_pi(depth + 8), depth);
}

Interval cos_analytic(const RealEnclosure& x, unsigned depth) { return cos_analytic(x.at(depth), depth); }

Interval tan_analytic(const Interval& x, unsigned depth) { return sin_analytic(x, depth) / cos_analytic(x, depth); }

LimitReport celebrated_limit_check(const std::vector<Angle>& angles, unsigned depth) {
  LimitReport rep;
  rep.depth = depth;
  for (const auto& a : angles) {
    const RealEnclosure measure = measure_m(a).value;
    // Successive ratios differ by about m^2 / 8, so both brackets tighten with 1/m^3.
    const Integer inv = floor_of(1 / measure.at(depth).lo());
    const unsigned extra = inv > 0 ? static_cast<unsigned>(mpz_sizeinbase(inv.get_mpz_t(), 2)) : 0;
    const Interval m = measure.at(depth + 2 * extra);
    const Interval s = sin_geometric(a).at(depth + 8 + 3 * extra);
    LimitSample sample{s, m, Interval(s.lo() / m.hi(), s.hi() / m.lo())};
    if (sample.ratio.lo() > 1 || sample.ratio.hi() <= 0) rep.within_unit = false;
    if (!rep.samples.empty() && sample.ratio.lo() <= rep.samples.back().ratio.lo()) rep.increasing = false;
    rep.samples.push_back(sample);
  }
  return rep;
}

std::vector<Angle> halving_sequence(unsigned halvings) {
  const Point o{};
  std::vector<Angle> out;
  Rational t = 1;
  out.push_back(angle_from_points({1, 0}, o, {1, t}));
  for (unsigned k = 1; k <= halvings; ++k) {
    // tan(x/2) = tan x / (1 + sqrt(1 + tan^2 x)), on a fine dyadic grid.
    const unsigned bits = 40 + 2 * k;
    const Rational root = sqrt_down(1 + t * t, bits);
    t = round_down(t / (1 + root), bits);
    out.push_back(angle_from_points({1, 0}, o, {1, t}));
  }
  return out;
}

}  // namespace eudoxos
