// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eudoxos/angle.hpp"
#include "eudoxos/error.hpp"
#include "eudoxos/exhaustion.hpp"
#include "oracles.hpp"

using namespace eudoxos;

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

const Rational kLowArchimedes = 3 + make_rational(10, 71);
const Rational kHighArchimedes = 3 + make_rational(1, 7);

Interval machin() {
  const auto b = oracle::machin_pi();
  return Interval(b.lo, b.hi);
}

Interval scaled_pi(const Rational& s) { return s * machin(); }

Sector quarter(const Point& c, const Rational& r) { return Sector::make(c, r, pt(1, 0), pt(0, 1)); }

Region unit_square() { return Region({Polygon::rectangle(Rational(1), Rational(1))}); }

}  // namespace

TEST_CASE("side counts") {
  CHECK(sides_at(0) == 6);
  CHECK(sides_at(4) == 96);
  CHECK(sides_at(10) == 6144);
}

TEST_CASE("hexagon start") {
  const ExhaustionBounds b = inscribed_outer_bounds(Rational(1), 0);
  CHECK(b.sides == 6);
  CHECK(b.inner_perimeter == Interval(Rational(6)));
  CHECK(b.perimeter_lo() / 2 == 3);
  CHECK(b.perimeter_hi() / 2 > machin().hi());
}

TEST_CASE("96-gon perimeter bounds") {
  const ExhaustionBounds b = inscribed_outer_bounds(Rational(1), 4);
  CHECK(b.sides == 96);
  CHECK(b.perimeter_lo() / 2 > kLowArchimedes);
  CHECK(b.perimeter_hi() / 2 < kHighArchimedes);
  // Reference semi-perimeters, 30 digits.
  const Rational inner = oracle::decimal(oracle::kInner96);
  const Rational outer = oracle::decimal(oracle::kOuter96);
  CHECK(b.perimeter_lo() / 2 <= inner);
  CHECK(b.perimeter_hi() / 2 >= outer);
  CHECK(inner - b.perimeter_lo() / 2 < pow2(-60));
  CHECK(b.perimeter_hi() / 2 - outer < pow2(-60));
  const auto [lo, hi] = oracle::archimedes_double(4);
  CHECK(Rational(b.perimeter_lo() / 2).get_d() == doctest::Approx(static_cast<double>(lo)).epsilon(1e-15));
  CHECK(Rational(b.perimeter_hi() / 2).get_d() == doctest::Approx(static_cast<double>(hi)).epsilon(1e-15));
}

TEST_CASE("96-gon area bounds") {
  const ExhaustionBounds b = inscribed_outer_bounds(Rational(1), 4);
  CHECK(b.area_lo() >= make_rational(3139, 1000));
  CHECK(b.area_hi() <= make_rational(3146, 1000));
  const Rational inner = oracle::decimal(oracle::kInnerArea96);
  CHECK(b.area_lo() <= inner);
  CHECK(inner - b.area_lo() < pow2(-60));
  CHECK(b.area_lo() < machin().lo());
  CHECK(b.area_hi() > machin().hi());
}

TEST_CASE("bounds scale with the radius") {
  for (const Rational r : {make_rational(1, 2), make_rational(7, 3), Rational(5)}) {
    const ExhaustionBounds b = inscribed_outer_bounds(r, 6);
    CHECK(b.perimeter_lo() < (2 * r * machin()).lo());
    CHECK(b.perimeter_hi() > (2 * r * machin()).hi());
    CHECK(b.area_lo() < (r * r * machin()).lo());
    CHECK(b.area_hi() > (r * r * machin()).hi());
  }
}

TEST_CASE("pi_enclosure") {
  const PiEnclosure d4 = pi_enclosure(4);
  CHECK(d4.sides == 96);
  CHECK(d4.lower > kLowArchimedes);
  CHECK(d4.upper < kHighArchimedes);
  CHECK(pi_enclosure(0).lower >= 3);
  CHECK(pi_enclosure(10).upper - pi_enclosure(10).lower <= make_rational(1, 10000));
  for (unsigned d = 0; d <= 14; ++d) {
    const PiEnclosure e = pi_enclosure(d);
    CHECK(e.lower < e.upper);
    CHECK(Interval(e.lower, e.upper).contains(machin()));
    CHECK(pi_real().at(d) == Interval(e.lower, e.upper));
  }
}

TEST_CASE("pi enclosures nest strictly") {
  for (unsigned d = 0; d < 14; ++d) {
    const PiEnclosure a = pi_enclosure(d);
    const PiEnclosure b = pi_enclosure(d + 1);
    CHECK(a.lower < b.lower);
    CHECK(b.upper < a.upper);
  }
}

TEST_CASE("exhaustion rate") {
  for (const Rational r : {Rational(1), make_rational(7, 3)}) {
    Rational prev = -1;
    for (unsigned n = 0; n <= 16; ++n) {
      const ExhaustionBounds b = inscribed_outer_bounds(r, n);
      const Rational gap = b.perimeter_hi() - b.perimeter_lo() + b.area_hi() - b.area_lo();
      if (prev >= 0) CHECK(gap < prev);
      prev = gap;
    }
    CHECK(prev < make_rational(1, 100000000));
  }
}

TEST_CASE("arc_sup_b") {
  const Arc full{Rational(1), Sweep{std::nullopt, 2}};
  for (unsigned d = 0; d <= 10; d += 2) CHECK(arc_sup_b(full).at(d).contains(2 * pi_real().at(d + 8)));
  const Arc quarter_arc{Rational(1), sweep_between(pt(1, 0), pt(0, 1))};
  const Interval q = arc_sup_b(quarter_arc).at(12);
  CHECK(q.contains(scaled_pi(make_rational(1, 2))));
  CHECK(q.width() < make_rational(1, 1000));
  CHECK(code_of([] { arc_sup_b(Arc{Rational(1), Sweep{}}); }) == ErrorCode::EmptyArc);
}

TEST_CASE("arc length is finitely additive") {
  const Arc a{Rational(2), sweep_between(pt(1, 0), pt(3, 4))};
  const Arc b{Rational(2), sweep_between(pt(3, 4), pt(-1, 1))};
  const Arc ab{Rational(2), sweep_between(pt(1, 0), pt(-1, 1))};
  for (unsigned d = 0; d <= 12; d += 3) CHECK((arc_sup_b(a).at(d) + arc_sup_b(b).at(d)).overlaps(arc_sup_b(ab).at(d)));
  const Arc wide{Rational(1), sweep_between(pt(1, 0), pt(1, -1))};
  CHECK(arc_sup_b(wide).at(14).contains(scaled_pi(make_rational(7, 4))));
}

TEST_CASE("sweeps") {
  const Sweep right = sweep_between(pt(1, 0), pt(0, 1));
  REQUIRE(right.part.has_value());
  CHECK(right.half_turns == 0);
  CHECK(right.part->is_right());
  CHECK(sweep_between(pt(1, 0), pt(-1, 0)).half_turns == 1);
  CHECK_FALSE(sweep_between(pt(1, 0), pt(-1, 0)).part.has_value());
  CHECK(sweep_between(pt(1, 0), pt(2, 0)).empty());
  const Sweep reflex = sweep_between(pt(0, 1), pt(1, 0));
  CHECK(reflex.half_turns == 1);
  CHECK(reflex.part->is_right());
}

TEST_CASE("sector_content") {
  const Interval q = sector_content(quarter(pt(0, 0), Rational(1))).at(12);
  CHECK(q.contains(scaled_pi(make_rational(1, 4))));
  const Sector half = Sector::make(pt(3, 3), Rational(2), pt(1, 0), pt(-1, 0));
  CHECK(sector_content(half).at(12).contains(scaled_pi(Rational(2))));
  const Interval disk = sector_content(Sector::disk(pt(0, 0), Rational(1))).at(12);
  CHECK(disk.contains(machin()));
  CHECK(disk.overlaps(pi_real().at(12)));
}

TEST_CASE("twice the sector is the radius times the arc") {
  const std::vector<std::pair<Point, Point>> arms = {
      {pt(1, 0), pt(3, 4)}, {pt(1, 0), pt(0, 1)}, {pt(2, 1), pt(-3, 5)}, {pt(0, 1), pt(1, 0)}, {pt(1, 1), pt(1, -1)}};
  for (const Rational r : {Rational(1), make_rational(5, 2)})
    for (const auto& [s, e] : arms) {
      const Sector sec = Sector::make(pt(0, 0), r, s, e);
      for (unsigned d = 0; d <= 12; d += 2)
        CHECK((2 * sector_content(sec).at(d)).overlaps(r * arc_sup_b(sec.arc()).at(d)));
    }
}

TEST_CASE("region_content") {
  const Region sq = unit_square();
  CHECK(region_content(sq).at(0) == Interval(Rational(1)));
  const Region mixed({Polygon::rectangle(Rational(1), Rational(1)), quarter(pt(2, 0), Rational(1))});
  CHECK(region_content(mixed).at(12).contains(Interval(Rational(1)) + scaled_pi(make_rational(1, 4))));
  CHECK(code_of([] {
          Region({Polygon::rectangle(Rational(2), Rational(2)), Sector::disk(pt(1, 1), Rational(1))});
        }) == ErrorCode::NotDisjoint);
  CHECK(code_of([] { Region(std::vector<RegionPart>{}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] {
          Region({quarter(pt(0, 0), Rational(1)), Sector::make(pt(0, 0), Rational(1), pt(1, 1), pt(-1, 1))});
        }) == ErrorCode::NotDisjoint);
}

TEST_CASE("touching parts are allowed") {
  const Region r({quarter(pt(0, 0), Rational(1)), Sector::make(pt(0, 0), Rational(1), pt(0, 1), pt(-1, 0)),
                  Polygon::rectangle(Rational(1), Rational(1), pt(0, -1))});
  CHECK(region_content(r).at(12).contains(Interval(Rational(1)) + scaled_pi(make_rational(1, 2))));
}

TEST_CASE("region_eta") {
  const Region qd({quarter(pt(0, 0), Rational(1))});
  CHECK(region_eta(qd, unit_square(), 8) == EtaResult::LeqCertified);
  CHECK(region_eta(unit_square(), unit_square(), 0) == EtaResult::LeqCertified);
  const Region inscribed({Sector::disk(Point{make_rational(1, 2), make_rational(1, 2)}, make_rational(1, 2))});
  CHECK(region_eta(unit_square(), inscribed, 8) == EtaResult::GtCertified);
  CHECK(region_zeta(unit_square(), unit_square(), 0) == ZetaResult::Equivalent);
  CHECK(region_zeta(unit_square(), inscribed, 8) == ZetaResult::NotEquivalent);
  CHECK(to_string(EtaResult::Undecided) == "Undecided");
}

TEST_CASE("polygons embed as point contents") {
  const std::vector<Polygon> polys = {Polygon::rectangle(make_rational(3, 2), make_rational(2, 7)),
                                      Polygon::triangle(pt(0, 0), pt(4, 0), pt(1, 3)),
                                      Polygon({pt(0, 0), pt(3, 0), pt(3, 3), pt(2, 1), pt(0, 2)})};
  for (const auto& p : polys)
    for (unsigned d = 0; d <= 8; d += 4) CHECK(region_content(Region({p})).at(d) == Interval(content(p)));
}

TEST_CASE("zeta is an equivalence on samples") {
  const std::vector<Region> sample = {
      unit_square(),
      Region({Polygon::rectangle(Rational(2), make_rational(1, 2))}),
      Region({quarter(pt(0, 0), Rational(1))}),
      Region({quarter(pt(5, 5), Rational(1))}),
      Region({Sector::disk(pt(0, 0), make_rational(1, 2))}),
  };
  for (const auto& x : sample) CHECK(region_zeta(x, x, 8) == ZetaResult::Equivalent);
  for (const auto& x : sample)
    for (const auto& y : sample) {
      CHECK(region_zeta(x, y, 8) == region_zeta(y, x, 8));
      for (const auto& z : sample)
        if (region_zeta(x, y, 8) == ZetaResult::Equivalent && region_zeta(y, z, 8) == ZetaResult::Equivalent)
          CHECK(region_zeta(x, z, 8) != ZetaResult::NotEquivalent);
    }
  CHECK(region_zeta(sample[0], sample[1], 0) == ZetaResult::Equivalent);
}

TEST_CASE("region files") {
  const Region r = parse_region_file(
      "# square and a quarter disk\n"
      "polygon: (0,0),(1,0),(1,1),(0,1)\n"
      "sector: 2,0,1,1:0,0:1\n");
  CHECK(r.parts().size() == 2);
  CHECK(region_content(r).at(12).contains(Interval(Rational(1)) + scaled_pi(make_rational(1, 4))));
  const Region d = parse_region_file("sector: 0,0,1/2,1:0,full\n");
  CHECK(region_content(d).at(12).contains(scaled_pi(make_rational(1, 4))));
  CHECK(code_of([] { parse_region_file("circle: 0,0,1\n"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("xii2_verify") {
  const Xii2Record a = xii2_verify(Rational(1), Rational(2), 10);
  CHECK(a.squares_ratio == make_rational(1, 4));
  CHECK(a.circle_ratio.size() == 11);
  for (const auto& iv : a.circle_ratio) CHECK(iv.contains(make_rational(1, 4)));
  CHECK(a.ratio_contains_squares);
  CHECK(a.polygons_similar);
  CHECK(a.witnesses.empty());
  CHECK(a.undecided.empty());
  CHECK(a.verified());
  CHECK(a.exhaustion_steps <= 10);
  CHECK(a.cases == a.refuted_by_squares + a.refuted_by_enclosure + a.boundary.size());

  const Xii2Record b = xii2_verify(Rational(1), Rational(3), 10);
  CHECK(b.squares_ratio == make_rational(1, 9));
  CHECK(b.circle_ratio.back().contains(make_rational(1, 9)));
  CHECK(b.verified());

  const Xii2Record c = xii2_verify(make_rational(2, 3), make_rational(5, 7), 8, 40);
  CHECK(c.squares_ratio == make_rational(196, 225));
  CHECK(c.verified());
  CHECK(code_of([] { xii2_verify(Rational(0), Rational(1), 4); }) == ErrorCode::NonPositive);
}

TEST_CASE("xii2 branch counts match a direct enumeration") {
  for (const auto& [r1, r2] : {std::pair{Rational(1), Rational(2)}, std::pair{Rational(2), Rational(3)}}) {
    const Xii2Record rec = xii2_verify(r1, r2, 10);
    const Rational rho = r1 * r1 / (r2 * r2);
    std::uint64_t pairs = 0, on_ratio = 0;
    for (long n1 = 1; n1 < 100; ++n1)
      for (long n2 = 1; n1 + n2 <= 100; ++n2) {
        ++pairs;
        if (make_rational(n1, n2) == rho) ++on_ratio;
      }
    CHECK(rec.cases == 4 * pairs);
    CHECK(rec.refuted_by_squares == 2 * pairs);
    CHECK(rec.boundary.size() == 2 * on_ratio);
    CHECK(rec.refuted_by_enclosure == 2 * (pairs - on_ratio));
    CHECK(rec.boundary_margin <= rec.circle_ratio.back().width());
  }
}
