// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eudoxos/angle.hpp"
#include "eudoxos/error.hpp"
#include "eudoxos/exhaustion.hpp"
#include "eudoxos/trig.hpp"
#include "oracles.hpp"
#include "samples.hpp"

using namespace eudoxos;
using samples::random_acute;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }
Triple tri(Point a, Point b, Point c) { return {a, b, c}; }

Interval machin_times(const Rational& s) {
  const auto b = oracle::machin_pi();
  return s * Interval(b.lo, b.hi);
}

Interval bounds(const oracle::Bounds& b) { return Interval(b.lo, b.hi); }

Angle right() { return angle_from_points(pt(1, 0), pt(0, 0), pt(0, 1)); }

/// sin of the angle between (1, 0) and (x, y): y / |(x, y)|.
Interval sin_oracle(const Angle& a) {
  const Rational s2 = a.cross_sq() / a.norm_product_sq();
  return bounds(oracle::bisect_sqrt(s2, 120));
}

}  // namespace

TEST_CASE("angle_from_points") {
  CHECK(right().is_right());
  CHECK(angle_from_points(pt(2, 0), pt(0, 0), pt(0, 3)) == right());
  CHECK(code_of([] { angle_from_points(pt(1, 0), pt(0, 0), pt(2, 0)); }) == ErrorCode::Collinear);
  CHECK(code_of([] { angle_from_points(pt(1, 0), pt(0, 0), pt(-2, 0)); }) == ErrorCode::Collinear);
  CHECK(code_of([] { angle_from_points(pt(1, 0), pt(1, 0), pt(2, 5)); }) == ErrorCode::DuplicatePoint);
  const Angle a = angle_from_points(pt(4, 2), pt(1, 1), pt(1, 7));
  REQUIRE(a.rep().has_value());
  CHECK(*a.rep() == tri(pt(1, 2), pt(1, 1), pt(4, 2)));
  CHECK(angle_from_points(pt(0, 1), pt(0, 0), pt(1, 0)) == right());
}

TEST_CASE("angle_equiv") {
  CHECK(angle_equiv(tri(pt(1, 0), pt(0, 0), pt(0, 1)), tri(pt(0, 1), pt(0, 0), pt(1, 0))));
  CHECK_FALSE(angle_equiv(tri(pt(1, 0), pt(0, 0), pt(0, 1)), tri(pt(2, 0), pt(1, 0), pt(1, 1))));
  CHECK(angle_equiv(tri(pt(1, 0), pt(0, 0), pt(1, 1)), tri(pt(1, 0), pt(0, 0), pt(2, 2))));
  CHECK(angle_equiv(tri(pt(3, 0), pt(0, 0), pt(1, 1)), tri(pt(1, 0), pt(0, 0), pt(5, 5))));
  CHECK_FALSE(angle_equiv(tri(pt(1, 0), pt(0, 0), pt(1, 1)), tri(pt(1, 0), pt(0, 0), pt(1, 2))));
  CHECK(code_of([] { angle_equiv(tri(pt(1, 0), pt(0, 0), pt(2, 0)), tri(pt(1, 0), pt(0, 0), pt(1, 1))); }) ==
        ErrorCode::Collinear);
}

TEST_CASE("measure_m") {
  const Interval m = measure_m(right()).value.at(12);
  CHECK(m.contains(machin_times(make_rational(1, 2))));
  CHECK(m.width() <= make_rational(1, 1000));
  CHECK(measure_m(Angle::with_cosine(make_rational(1, 2))).value.at(12).contains(machin_times(make_rational(1, 3))));
  CHECK(measure_m(Angle::turns(1)).value.at(12).contains(machin_times(Rational(2))));
  CHECK(measure_m(right()).unit == AngleUnit::d);
  CHECK(to_degrees(measure_m(right())).at(14).contains(Rational(90)));
  CHECK(measure_m(right()).in(AngleUnit::rightAngle).value.at(14).contains(Rational(1)));
  CHECK(measure_m(right()).in(AngleUnit::e).value.at(14).contains(machin_times(make_rational(1, 4))));
}

TEST_CASE("measure_mu") {
  CHECK(measure_mu(right()).value.at(12).contains(machin_times(make_rational(1, 4))));
  CHECK(measure_mu(Angle::turns(1)).value.at(12).contains(machin_times(Rational(1))));
  CHECK(measure_mu(Angle::turns(2)).value.at(12).contains(machin_times(Rational(2))));
  CHECK(measure_mu(Angle::with_cosine(make_rational(1, 2))).value.at(12).contains(machin_times(make_rational(1, 6))));
  CHECK(measure_mu(right()).unit == AngleUnit::e);
}

TEST_CASE("unit_relation_check") {
  const UnitRelationReport r = unit_relation_check(12);
  CHECK(r.passed());
  CHECK(r.cases >= 5);
  CHECK(r.min_overlap >= 0);
  CHECK(unit_relation_check(4).passed());
}

TEST_CASE("sin_geometric") {
  const RealEnclosure s = sin_geometric(angle_from_points(pt(5, 0), pt(0, 0), pt(3, 4)));
  REQUIRE(s.is_exact());
  CHECK(*s.exact_value() == make_rational(4, 5));
  const Interval h = sin_geometric(angle_from_points(pt(1, 0), pt(0, 0), pt(1, 1))).at(20);
  CHECK(h.overlaps(bounds(oracle::bisect_sqrt(make_rational(1, 2), 120))));
  CHECK(h.width() <= pow2(-20));
  CHECK(code_of([] { sin_geometric(right()); }) == ErrorCode::NotAcute);
  CHECK(code_of([] { sin_geometric(angle_from_points(pt(1, 0), pt(0, 0), pt(-1, 1))); }) == ErrorCode::NotAcute);
  CHECK(to_real(sin_ratio(angle_from_points(pt(5, 0), pt(0, 0), pt(3, 4)))).at(10).contains(make_rational(4, 5)));
}

TEST_CASE("asin_integral") {
  const Interval sixth = asin_integral(make_rational(1, 2), 14);
  CHECK(sixth.contains(machin_times(make_rational(1, 6))));
  CHECK(sixth.overlaps(bounds(oracle::asin_of_rational(make_rational(1, 2)))));
  CHECK(sixth.width() < make_rational(1, 1000));
  const Interval quarter = asin_integral_of_sqrt(make_rational(1, 2), 14);
  CHECK((2 * quarter).overlaps(machin_times(make_rational(1, 2))));
  CHECK(quarter.overlaps(bounds(oracle::asin_of_sqrt(make_rational(1, 2)))));
  // Past 1/sqrt(2) the complement identity is used.
  CHECK(asin_integral(make_rational(9, 10), 14).overlaps(bounds(oracle::asin_of_rational(make_rational(9, 10), 400))));
  CHECK(code_of([] { asin_integral(Rational(1), 4); }) == ErrorCode::DomainError);
  CHECK(code_of([] { asin_integral(Rational(0), 4); }) == ErrorCode::DomainError);
  CHECK(code_of([] { asin_integral(Rational(-1, 2), 4); }) == ErrorCode::DomainError);
  CHECK(asin_enclosure(make_rational(1, 3)).at(12).overlaps(bounds(oracle::asin_of_rational(make_rational(1, 3)))));
}

TEST_CASE("asin_integral is monotone in x and nested in depth") {
  for (long k = 1; k < 20; ++k) {
    const Rational x = make_rational(k, 20);
    Interval prev = asin_integral(x, 0);
    for (unsigned d = 1; d <= 10; ++d) {
      const Interval cur = asin_integral(x, d);
      CHECK(prev.contains(cur));
      prev = cur;
    }
    CHECK(prev.overlaps(bounds(oracle::asin_of_rational(x, 600))));
    if (k < 19) CHECK(asin_integral(x, 12).hi() < asin_integral(make_rational(k + 1, 20), 12).lo());
  }
}

TEST_CASE("sin_analytic") {
  CHECK(sin_analytic(pi_real().scaled(make_rational(1, 6)), 12).contains(make_rational(1, 2)));
  CHECK(sin_analytic(Rational(0), 12) == Interval(Rational(0)));
  CHECK(sin_analytic(pi_real().scaled(make_rational(1, 2)), 12).contains(Rational(1)));
  for (const Rational x : {make_rational(1, 2), Rational(1), make_rational(3, 2), Rational(4), Rational(100)}) {
    const Interval s = sin_analytic(x, 12);
    CHECK(s.overlaps(bounds(oracle::sin_series(x, 400))));
    CHECK(s.width() <= pow2(-12));
  }
  CHECK(sin_analytic(Rational(4), 12).hi() < 0);
  CHECK(code_of([] { sin_analytic(Rational(-1), 4); }) == ErrorCode::DomainError);
}

TEST_CASE("cos_analytic and tan_analytic") {
  CHECK(cos_analytic(Rational(0), 12).contains(Rational(1)));
  CHECK(cos_analytic(pi_real().scaled(make_rational(1, 3)), 12).contains(make_rational(1, 2)));
  const RealEnclosure fifth = pi_real().scaled(make_rational(1, 5));
  const Interval s = sin_analytic(fifth, 12);
  const Interval c = cos_analytic(fifth, 12);
  CHECK((s * s + c * c).contains(Rational(1)));
  CHECK(tan_analytic(pi_real().at(20) * Interval(make_rational(1, 4)), 12).contains(Rational(1)));
  const Interval half = cos_analytic(make_rational(1, 2), 12);
  const auto sn = oracle::sin_series(make_rational(1, 2));
  CHECK((half * half).overlaps(Interval(1 - sn.hi * sn.hi, 1 - sn.lo * sn.lo)));
}

TEST_CASE("analytic cosine agrees with the geometric complement") {
  std::mt19937_64 rng(61);
  for (const Angle& a : random_acute(rng, 10)) {
    const Interval m = measure_m(a).value.at(12);
    const Interval c = cos_analytic(m, 12);
    const Rational c2 = a.dot() * a.dot() / a.norm_product_sq();
    CHECK(c.overlaps(bounds(oracle::bisect_sqrt(c2, 120))));
  }
}

TEST_CASE("celebrated_limit_check") {
  const LimitReport one = celebrated_limit_check({angle_from_points(pt(1, 0), pt(0, 0), pt(1, 1))}, 12);
  REQUIRE(one.samples.size() == 1);
  const Interval r = one.samples[0].ratio;
  CHECK(r.contains(oracle::decimal(oracle::kRatio45)));
  CHECK(r.lo() >= make_rational(9002, 10000));
  CHECK(r.hi() <= make_rational(9005, 10000));

  const LimitReport seq = celebrated_limit_check(halving_sequence(8), 12);
  CHECK(seq.samples.size() == 9);
  CHECK(seq.increasing);
  CHECK(seq.within_unit);
  CHECK(seq.passed());
  for (std::size_t i = 1; i < seq.samples.size(); ++i) CHECK(seq.samples[i].ratio.lo() > seq.samples[i - 1].ratio.lo());
  CHECK(seq.samples.back().ratio.lo() > make_rational(999, 1000));
  CHECK(code_of([] { angle_from_points(pt(1, 0), pt(0, 0), pt(1, 0)); }) == ErrorCode::DuplicatePoint);
  CHECK(code_of([] { angle_from_points(pt(1, 0), pt(0, 0), pt(3, 0)); }) == ErrorCode::Collinear);
}

TEST_CASE("halving sequence halves") {
  const auto seq = halving_sequence(6);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const Interval prev = measure_m(seq[i - 1]).value.at(12);
    const Interval cur = measure_m(seq[i]).value.at(12);
    CHECK((2 * cur).overlaps(Interval(prev.lo() - pow2(-30), prev.hi() + pow2(-30))));
    CHECK(compare_parts(seq[i], seq[i - 1]) == Order::Less);
  }
}

TEST_CASE("measure is additive over adjacent angles") {
  const std::vector<std::array<Point, 3>> rays = {{pt(1, 0), pt(3, 4), pt(-4, 3)},
                                                  {pt(1, 0), pt(1, 2), pt(-1, 5)},
                                                  {pt(2, 1), pt(0, 1), pt(-3, 1)}};
  for (const auto& [u, v, w] : rays) {
    const Angle a = angle_from_points(u, pt(0, 0), v);
    const Angle b = angle_from_points(v, pt(0, 0), w);
    const Angle ab = angle_from_points(u, pt(0, 0), w);
    for (unsigned d = 0; d <= 12; d += 4)
      CHECK((measure_m(a).value.at(d) + measure_m(b).value.at(d)).overlaps(measure_m(ab).value.at(d)));
  }
}

TEST_CASE("m is twice mu at every depth") {
  std::mt19937_64 rng(67);
  auto angles = random_acute(rng, 12);
  angles.push_back(Angle::with_cosine(make_rational(-3, 7)));
  angles.push_back(right().with_windings(2));
  for (const Angle& a : angles)
    for (unsigned d = 0; d <= 12; d += 3) CHECK(measure_m(a).value.at(d).overlaps(2 * measure_mu(a).value.at(d)));
}

TEST_CASE("measure does not depend on the radius") {
  std::mt19937_64 rng(71);
  for (const Angle& a : random_acute(rng, 12))
    for (unsigned d = 0; d <= 12; d += 3)
      CHECK(measure_m(a).value.at(d).overlaps(measure_m(a, make_rational(7, 3)).value.at(d)));
}

TEST_CASE("sin and measure are monotone on acute angles") {
  std::mt19937_64 rng(73);
  const auto angles = random_acute(rng, 16);
  for (const Angle& a : angles)
    for (const Angle& b : angles) {
      if (compare_parts(a, b) != Order::Less) continue;
      unsigned d = 8;
      while (d < 40 && !(measure_m(a).value.at(d).hi() < measure_m(b).value.at(d).lo())) d += 8;
      CHECK(measure_m(a).value.at(d).hi() < measure_m(b).value.at(d).lo());
      d = 8;
      while (d < 80 && !(sin_geometric(a).at(d).hi() < sin_geometric(b).at(d).lo())) d += 8;
      CHECK(sin_geometric(a).at(d).hi() < sin_geometric(b).at(d).lo());
    }
}

TEST_CASE("analytic sine of the measure is the geometric sine") {
  std::mt19937_64 rng(79);
  for (const Angle& a : random_acute(rng, 20)) {
    const Interval s = sin_analytic(measure_m(a).value, 12);
    CHECK(s.overlaps(sin_geometric(a).at(12)));
    CHECK(s.overlaps(sin_oracle(a)));
  }
}

TEST_CASE("angle magnitudes") {
  const Magnitude m = angle_magnitude(right());
  CHECK(m.kind() == KindId::AnglesOfKind);
  CHECK(compare(angle_magnitude(angle_from_points(pt(1, 0), pt(0, 0), pt(1, 1))), m) == Order::Less);
  CHECK(add(m, m).value().at(12).contains(machin_times(Rational(1))));
  CHECK(compare_parts(right(), Angle::with_cosine(Rational(0))) == Order::Equal);
}
