// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "eudoxos/angle.hpp"
#include "eudoxos/exhaustion.hpp"
#include "eudoxos/polygon.hpp"
#include "eudoxos/positional.hpp"
#include "eudoxos/ratio.hpp"
#include "eudoxos/trig.hpp"
#include "oracles.hpp"
#include "samples.hpp"

using namespace eudoxos;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

Magnitude lex(const LexPair& p) { return Magnitude::lex(p.major, p.minor); }

Interval half_pi(unsigned depth) {
  const PiEnclosure p = pi_enclosure(depth);
  return Interval(p.lower / 2, p.upper / 2);
}

Verdict archimedes_bounds() {
  Verdict v;
  const auto start = Clock::now();
  const PiEnclosure p = pi_enclosure(4);
  const double elapsed = seconds_since(start);
  v.require(p.sides == 96, "depth 4 is not the 96-gon");
  v.require(Rational(3) + Rational(10, 71) <= p.lower, "lower bound below 3 10/71");
  v.require(p.upper <= Rational(3) + Rational(1, 7), "upper bound above 3 1/7");
  v.require(elapsed < 1.0, "96-gon took " + std::to_string(elapsed) + " s");
  PiEnclosure prev = pi_enclosure(0);
  for (unsigned d = 1; d <= 12; ++d) {
    const PiEnclosure cur = pi_enclosure(d);
    v.require(prev.lower < cur.lower && cur.upper < prev.upper, "depth " + std::to_string(d) + " not strictly nested");
    prev = cur;
  }
  v.require(prev.upper - prev.lower <= Rational(1, 10000), "width at depth 12 above 1e-4");
  const auto ref = oracle::machin_pi();
  v.require(prev.lower < ref.lo && ref.hi < prev.upper, "depth 12 misses the series value");
  v.note = v.ok ? "96 sides in " + std::to_string(elapsed) + " s" : v.note;
  return v;
}

Verdict unit_relation() {
  Verdict v;
  std::mt19937_64 rng(101);
  const auto angles = samples::random_acute_general(rng, 20);
  for (const Angle& a : angles) {
    const Interval m = measure_m(a).value.at(10);
    const Interval mu = measure_mu(a).value.at(10);
    v.require(overlap_margin(m, Rational(2) * mu) > 0, "m and 2 mu do not overlap");
  }
  v.require(unit_relation_check(10).passed(), "unit_relation_check failed");
  return v;
}

Verdict right_angle() {
  Verdict v;
  const Angle r = angle_from_points(samples::pt(1, 0), samples::pt(0, 0), samples::pt(0, 1));
  const Interval m = measure_m(r).value.at(12);
  const Interval h = half_pi(12);
  v.require(m.lo() <= h.lo() && h.hi() <= m.hi(), "measure does not contain the pi/2 enclosure");
  v.require(m.width() <= Rational(1, 1000), "width above 1e-3");
  return v;
}

Verdict integral_identity() {
  Verdict v;
  const auto start = Clock::now();
  const Interval a = asin_integral_of_sqrt(Rational(1, 2), 14);
  const double elapsed = seconds_since(start);
  const Interval twice = Rational(2) * a;
  v.require(twice.overlaps(half_pi(12)), "doubled integral misses pi/2");
  v.require(twice.width() <= Rational(1, 1000), "width above 1e-3");
  v.require(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
  if (v.ok) v.note = std::to_string(elapsed) + " s";
  return v;
}

Verdict sine_round_trip() {
  Verdict v;
  std::mt19937_64 rng(103);
  for (const Angle& a : samples::random_acute_general(rng, 20)) {
    const Interval analytic = sin_analytic(measure_m(a).value, 12);
    v.require(analytic.overlaps(sin_geometric(a).at(12)), "sin and Sin disagree");
  }
  const RealEnclosure s = sin_geometric(angle_from_points(samples::pt(5, 0), samples::pt(0, 0), samples::pt(3, 4)));
  v.require(s.is_exact() && *s.exact_value() == Rational(4, 5), "3-4-5 Sin is not exactly 4/5");
  return v;
}

Verdict limit() {
  Verdict v;
  const LimitReport rep = celebrated_limit_check(halving_sequence(8), 12);
  v.require(rep.samples.size() == 9, "expected 9 samples");
  for (std::size_t i = 1; i < rep.samples.size(); ++i)
    v.require(rep.samples[i - 1].ratio.lo() < rep.samples[i].ratio.lo(), "lower bounds not increasing");
  const Interval last = rep.samples.back().ratio;
  v.require(last.lo() > Rational(1) - Rational(1, 1000) && last.hi() <= 1, "final enclosure outside (1-1e-3, 1]");
  v.require(rep.passed(), "report not passed");
  return v;
}

Verdict proposition() {
  Verdict v;
  const auto start = Clock::now();
  const PropositionReport rep = proposition_suite(30);
  const double elapsed = seconds_since(start);
  for (const auto& c : rep.clauses) v.require(c.passed, c.clause + " [" + c.kind + "]");
  bool naturals = false, segments = false;
  for (const auto& c : rep.clauses) {
    naturals = naturals || c.kind == "Naturals";
    segments = segments || c.kind == "Segments";
  }
  v.require(naturals && segments, "missing kinds");
  v.require(rep.separation.has_value(), "no separation witness");
  if (rep.separation) {
    const auto& w = *rep.separation;
    const Ratio a(lex(w.x), lex(w.y));
    const Ratio b(lex(w.z), lex(w.w));
    v.require(eq_L(a, b, 50).status == ProportionResult::Status::Proportional, "witness not =_L");
    v.require(eq_E(a, b, 50).status == ProportionResult::Status::NotProportional, "witness =_E");
  }
  v.require(elapsed < 10.0, "took " + std::to_string(elapsed) + " s");
  if (v.ok) v.note = std::to_string(elapsed) + " s";
  return v;
}

Verdict measurement() {
  Verdict v;
  std::mt19937_64 rng(107);
  const Rational micro = Rational(1, 1000000);
  int pairs = 0, terminating = 0;
  while (pairs < 100) {
    const Rational b = oracle::random_positive(rng, 5000, 700);
    const Rational u = oracle::random_positive(rng, 90, 60);
    const Rational exact = b / u;
    DigitStream s = measure_positional(Magnitude::segment(b), Magnitude::segment(u), 10);
    s.ensure(12);
    if (s.terminated() && s.digits().size() < 6) {
      // Short expansions close to a point; checked apart from the width law.
      ++terminating;
      v.require(stream_to_enclosure(s, 6) == Interval(exact), "terminated stream is not exact");
      continue;
    }
    ++pairs;
    for (std::size_t p = 0; p <= 12; ++p)
      v.require(stream_to_enclosure(s, p).contains(exact), "prefix misses b/u");
    v.require(stream_to_enclosure(s, 6).width() == micro, "prefix 6 width is not 1e-6");
  }
  if (v.ok) v.note = "100 pairs, " + std::to_string(terminating) + " short terminating pairs checked apart";
  return v;
}

Verdict polygon_laws() {
  Verdict v;
  std::mt19937_64 rng(109);
  const long triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}};
  const Magnitude unit_square = polygon_magnitude(Polygon::rectangle(Rational(1), Rational(1)));
  for (int i = 0; i < 200; ++i) {
    const Polygon p = samples::random_polygon(rng);
    const Polygon q = samples::random_polygon(rng);
    Rational total = 0;
    for (const auto& t : p.triangulate()) total += content(t);
    v.require(total == content(p), "triangulation not additive");
    const auto& t = triples[i % 5];
    const Polygon r = p.rotated(Integer(t[0]), Integer(t[1]), Integer(t[2]));
    v.require(content(r) == content(p), "rotation changed content");
    v.require(rho1_equivalent(p, q) == (content(p) == content(q)), "rho1 disagrees with content");
    const RectangleDims d = rectangle_normal_form(p, oracle::random_positive(rng, 20, 9));
    const Polygon rect = Polygon::rectangle(d.side, d.other);
    v.require(rho1_equivalent(p, rect) && content(rect) == content(p), "normal form not rho1-equivalent");
    const Ratio bridge(polygon_magnitude(rect), unit_square);
    const Ratio product = mul_ratio(Ratio(Magnitude::segment(d.side), Magnitude::segment(Rational(1))),
                                    Ratio(Magnitude::segment(d.other), Magnitude::segment(Rational(1))));
    v.require(eq_E(bridge, product, 60).status == ProportionResult::Status::Proportional, "rectangle bridge fails");
  }
  return v;
}

Verdict xii2() {
  Verdict v;
  std::string note;
  for (const auto& [r1, r2] : {std::pair{1, 2}, std::pair{2, 3}}) {
    const auto start = Clock::now();
    const Xii2Record rec = xii2_verify(Rational(r1), Rational(r2), 10, 100);
    const double elapsed = seconds_since(start);
    const std::string tag = "(" + std::to_string(r1) + "," + std::to_string(r2) + ") ";
    v.require(rec.squares_ratio == Rational(r1 * r1, r2 * r2), tag + "squares ratio");
    v.require(rec.circle_ratio.back().contains(rec.squares_ratio), tag + "enclosure misses squares ratio");
    v.require(rec.verified(), tag + "not verified");
    v.require(rec.witnesses.empty(), tag + "contradiction witness reported");
    v.require(elapsed < 10.0, tag + "took " + std::to_string(elapsed) + " s");
    note += tag + std::to_string(elapsed) + " s ";
  }
  if (v.ok) v.note = note;
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"Archimedes bounds at 96 sides, nesting to depth 12", archimedes_bounds},
      {"m = 2 mu on 20 acute angles; e = 2d", unit_relation},
      {"right angle measures pi/2", right_angle},
      {"2 * integral to 1/sqrt(2) meets pi/2", integral_identity},
      {"sin(m) meets Sin on 20 acute angles; 3-4-5 exact", sine_round_trip},
      {"Sin/m increases to 1 along 8 halvings", limit},
      {"proposition suite at bound 30 with separation witness", proposition},
      {"digit prefixes enclose b/u on 100 pairs", measurement},
      {"polygon kind laws on 200 polygons", polygon_laws},
      {"circles as squares on diameters for (1,2) and (2,3)", xii2},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string("exception: ") + e.what();
    }
    std::printf("%s %2d %s%s%s\n", v.ok ? "PASS" : "FAIL", index++, name, v.note.empty() ? "" : ": ",
                v.note.c_str());
    if (!v.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
