// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#include "eudoxos/exhaustion.hpp"

#include <gmp.h>

#include <algorithm>
#include <cctype>
#include <sstream>

#include "eudoxos/error.hpp"

namespace eudoxos {

namespace {

unsigned bits_for(unsigned n, const Rational& r) {
  const auto den = mpz_sizeinbase(r.get_den_mpz_t(), 2);
  const auto num = mpz_sizeinbase(r.get_num_mpz_t(), 2);
  return 2 * n + 64 + static_cast<unsigned>(den + num);
}

Interval harmonic(const Interval& t, const Interval& p, unsigned bits) {
  return Interval(round_down(2 * t.lo() * p.lo() / (t.lo() + p.lo()), bits),
                  round_up(2 * t.hi() * p.hi() / (t.hi() + p.hi()), bits));
}

Interval geometric(const Interval& t, const Interval& p, unsigned bits) {
  return Interval(sqrt_down(t.lo() * p.lo(), bits), sqrt_up(t.hi() * p.hi(), bits));
}

RealEnclosure circle_content(const Rational& r) {
  return RealEnclosure::from_raw([r](unsigned k) {
    const ExhaustionBounds b = inscribed_outer_bounds(r, k);
    return Interval(b.area_lo(), b.area_hi());
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

Point parse_direction(std::string_view s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw Error(ErrorCode::InvalidInput, "direction '" + std::string(s) + "' is not dx:dy");
  return {parse_coordinate(parts[0]), parse_coordinate(parts[1])};
}

Point rot90(const Point& d) { return {-d.y, d.x}; }

// Position of e counterclockwise from s, in eighths of a turn: even values
// are exact multiples of a quarter turn, odd values lie strictly between.
int quarter_rank(const Point& s, const Point& e) {
  const int a = sgn(dot(s, e));
  const int b = sgn(cross(s, e));
  if (b == 0) return a > 0 ? 0 : 4;
  if (b > 0) return a > 0 ? 1 : a == 0 ? 2 : 3;
  return a < 0 ? 5 : a == 0 ? 6 : 7;
}

// Convex region containing the part of the disk inside the cone spanned by
// d0 and d1 (at most a quarter turn apart).
std::vector<Point> wedge_cover(const Point& c, const Rational& r, const Point& d0, const Point& d1) {
  const Rational n0 = norm_sq(d0);
  const Rational n1 = norm_sq(d1);
  const Rational h0 = r * sqrt_up(n0, 64);
  const Rational h1 = r * sqrt_up(n1, 64);
  const Point a0 = (h0 / n0) * d0;
  const Point a1 = (h1 / n1) * d1;
  // Corner where x.d0 = h0 and x.d1 = h1.
  const Rational det = d0.x * d1.y - d0.y * d1.x;
  const Point corner{(h0 * d1.y - h1 * d0.y) / det, (d0.x * h1 - d1.x * h0) / det};
  if (cross(d0, corner) >= 0 && cross(corner, d1) >= 0 && dot(a0, d1) <= h1 && dot(a1, d0) <= h0)
    return {c, c + a0, c + corner, c + a1};
  const Rational t0 = r / sqrt_down(n0, 64);
  const Rational t1 = r / sqrt_down(n1, 64);
  return {c, c + t0 * d0, c + t0 * d0 + t1 * d1, c + t1 * d1};
}

std::vector<std::vector<Point>> pieces_of(const RegionPart& part, unsigned level) {
  if (const auto* poly = std::get_if<Polygon>(&part)) {
    std::vector<std::vector<Point>> out;
    for (const auto& t : poly->triangulate()) out.push_back(t.vertices());
    return out;
  }
  const Sector& s = std::get<Sector>(part);
  std::vector<Point> dirs;
  if (s.full()) {
    Point d{1, 0};
    for (int k = 0; k < 4; ++k, d = rot90(d)) dirs.push_back(d);
    dirs.push_back({1, 0});
  } else {
    const Point st = primitive_direction(s.start());
    const Point en = primitive_direction(s.end());
    const int rank = quarter_rank(st, en);
    dirs.push_back(st);
    Point d = rot90(st);
    for (int k = 1; k < 4; ++k, d = rot90(d))
      if (2 * k < rank) dirs.push_back(d);
    dirs.push_back(en);
  }
  for (unsigned l = 0; l < level; ++l) {
    std::vector<Point> finer{dirs.front()};
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
      finer.push_back(primitive_direction(dirs[i] + dirs[i + 1]));
      finer.push_back(dirs[i + 1]);
    }
    dirs = std::move(finer);
  }
  std::vector<std::vector<Point>> out;
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i) out.push_back(wedge_cover(s.center(), s.radius(), dirs[i], dirs[i + 1]));
  return out;
}

bool certified_disjoint(const RegionPart& a, const RegionPart& b) {
  const bool curved = std::holds_alternative<Sector>(a) || std::holds_alternative<Sector>(b);
  const unsigned levels = curved ? 5 : 1;
  for (unsigned level = 0; level < levels; ++level) {
    const auto pa = pieces_of(a, level);
    const auto pb = pieces_of(b, level);
    bool ok = true;
    for (const auto& x : pa) {
      for (const auto& y : pb) {
        if (!convex_interiors_disjoint(x, y)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return true;
  }
  return false;
}

RealEnclosure part_content(const RegionPart& part) {
  if (const auto* poly = std::get_if<Polygon>(&part)) return RealEnclosure::exact(content(*poly));
  return sector_content(std::get<Sector>(part));
}

}  // namespace

std::uint64_t sides_at(unsigned depth) {
  if (depth > 60) throw Error(ErrorCode::InvalidInput, "doubling depth too large");
  return std::uint64_t{6} << depth;
}

ExhaustionBounds inscribed_outer_bounds(const Rational& r, unsigned n) {
  if (r <= 0) throw Error(ErrorCode::NonPositive, "radius must be positive");
  const unsigned bits = bits_for(n, r);
  // Semi-perimeters: inscribed hexagon (side r) and circumscribed hexagon,
  // the latter capped by the circumscribed square.
  Interval lower(3 * r);
  Interval upper(2 * r * sqrt_down(3, bits), std::min(Rational(2 * r * sqrt_up(3, bits)), Rational(4 * r)));
  for (unsigned k = 0; k < n; ++k) {
    upper = harmonic(upper, lower, bits);
    lower = geometric(upper, lower, bits);
  }
  ExhaustionBounds b;
  b.sides = sides_at(n);
  b.inner_perimeter = Rational(2) * lower;
  b.outer_perimeter = Rational(2) * upper;
  // Inscribed area r L cos(pi/N) with cos(pi/N) = L/U; circumscribed r U.
  b.inner_area = Interval(round_down(r * lower.lo() * lower.lo() / upper.hi(), bits),
                          round_up(r * lower.hi() * lower.hi() / upper.lo(), bits));
  b.outer_area = r * upper;
  return b;
}

const RealEnclosure& pi_real() {
  static const RealEnclosure pi = RealEnclosure::from_raw([](unsigned k) {
    const ExhaustionBounds b = inscribed_outer_bounds(1, k);
    const Rational lo = std::max(Rational(b.perimeter_lo() / 2), b.area_lo());
    const Rational hi = std::min(Rational(b.perimeter_hi() / 2), b.area_hi());
    return Interval(lo, hi);
  });
  return pi;
}

PiEnclosure pi_enclosure(unsigned depth) {
  const Interval i = pi_real().at(depth);
  return {sides_at(depth), i.lo(), i.hi()};
}

Sweep sweep_between(const Point& from, const Point& to) {
  if ((from.x == 0 && from.y == 0) || (to.x == 0 && to.y == 0))
    throw Error(ErrorCode::InvalidInput, "direction must be nonzero");
  const Point origin{};
  const int b = sgn(cross(from, to));
  if (b > 0) return {Angle::from_points(from, origin, to), 0};
  if (b == 0) return dot(from, to) > 0 ? Sweep{} : Sweep{std::nullopt, 1};
  const Point back{-from.x, -from.y};
  return {Angle::from_points(back, origin, to), 1};
}

Sweep sweep_of(const Angle& a) {
  Sweep s;
  if (a.has_part()) s.part = a.with_windings(0);
  s.half_turns = 2 * a.windings();
  return s;
}

RealEnclosure arc_sup_b(const Arc& c) {
  if (c.sweep.empty()) throw Error(ErrorCode::EmptyArc, "arc has zero extent");
  if (c.radius <= 0) throw Error(ErrorCode::NonPositive, "radius must be positive");
  std::optional<RealEnclosure> total;
  if (c.sweep.part) {
    total = RealEnclosure::from_raw([a = *c.sweep.part, r = c.radius](unsigned k) {
      const ChordTangent ct = chord_tangent_bounds(a, k, r);
      return Interval(ct.chords.lo(), ct.tangents.hi());
    });
  }
  if (c.sweep.half_turns > 0) {
    const RealEnclosure turns = pi_real().scaled(c.radius * c.sweep.half_turns);
    total = total ? *total + turns : turns;
  }
  return *total;
}

Sector Sector::make(const Point& center, const Rational& radius, const Point& start, const Point& end) {
  if (radius <= 0) throw Error(ErrorCode::NonPositive, "radius must be positive");
  if (sweep_between(start, end).empty()) throw Error(ErrorCode::EmptyArc, "sector has zero extent");
  return Sector(center, radius, start, end, false);
}

Sector Sector::disk(const Point& center, const Rational& radius) {
  if (radius <= 0) throw Error(ErrorCode::NonPositive, "radius must be positive");
  return Sector(center, radius, {1, 0}, {1, 0}, true);
}

Sweep Sector::sweep() const { return full_ ? Sweep{std::nullopt, 2} : sweep_between(start_, end_); }

std::vector<std::vector<Point>> Sector::convex_cover() const { return pieces_of(*this, 0); }

RealEnclosure sweep_area(const Sweep& sw, const Rational& r) {
  if (sw.empty()) throw Error(ErrorCode::EmptyArc, "sector has zero extent");
  if (r <= 0) throw Error(ErrorCode::NonPositive, "radius must be positive");
  std::optional<RealEnclosure> total;
  if (sw.part) {
    total = RealEnclosure::from_raw([a = *sw.part, r](unsigned k) {
      const ChordTangent ct = chord_tangent_bounds(a, k, r);
      const unsigned bits = rounding_bits(k);
      return Interval(round_down(r * ct.chords.lo() * ct.chords.lo() / (2 * ct.tangents.hi()), bits),
                      round_up(r * ct.tangents.hi() / 2, bits));
    });
  }
  if (sw.half_turns > 0) {
    const RealEnclosure turns = pi_real().scaled(r * r * sw.half_turns / 2);
    total = total ? *total + turns : turns;
  }
  return *total;
}

RealEnclosure sector_content(const Sector& s) { return sweep_area(s.sweep(), s.radius()); }

Region::Region(std::vector<RegionPart> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::InvalidInput, "a region needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (std::size_t j = i + 1; j < parts_.size(); ++j)
      if (!certified_disjoint(parts_[i], parts_[j]))
        throw Error(ErrorCode::NotDisjoint,
                    "parts " + std::to_string(i) + " and " + std::to_string(j) + " are not certified disjoint");
}

RealEnclosure region_content(const Region& x) {
  RealEnclosure total = part_content(x.parts().front());
  for (std::size_t i = 1; i < x.parts().size(); ++i) total = total + part_content(x.parts()[i]);
  return total;
}

Magnitude region_magnitude(const Region& x) {
  return Magnitude::region_class(region_content(x), {std::make_shared<const Region>(x)});
}

std::string_view to_string(EtaResult r) noexcept {
  switch (r) {
    case EtaResult::LeqCertified: return "LeqCertified";
    case EtaResult::GtCertified: return "GtCertified";
    case EtaResult::Undecided: return "Undecided";
  }
  return "?";
}

EtaResult region_eta(const Region& x, const Region& y, unsigned depth) {
  if (x == y) return EtaResult::LeqCertified;
  const RealEnclosure cx = region_content(x);
  const RealEnclosure cy = region_content(y);
  for (unsigned k = 0; k <= depth; ++k) {
    const Interval a = cx.at(k);
    const Interval b = cy.at(k);
    if (a.hi() <= b.lo()) return EtaResult::LeqCertified;
    if (a.lo() > b.hi()) return EtaResult::GtCertified;
  }
  return EtaResult::Undecided;
}

ZetaResult region_zeta(const Region& x, const Region& y, unsigned depth) {
  const EtaResult xy = region_eta(x, y, depth);
  const EtaResult yx = region_eta(y, x, depth);
  if (xy == EtaResult::GtCertified || yx == EtaResult::GtCertified) return ZetaResult::NotEquivalent;
  if (xy == EtaResult::LeqCertified && yx == EtaResult::LeqCertified) return ZetaResult::Equivalent;
  return ZetaResult::Undecided;
}

Region parse_region_file(std::string_view text) {
  std::vector<RegionPart> parts;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto colon = view.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::InvalidInput, "missing generator tag");
    const std::string_view tag = trim(view.substr(0, colon));
    const std::string_view body = trim(view.substr(colon + 1));
    if (tag == "polygon") {
      parts.emplace_back(parse_polygon_list(body));
    } else if (tag == "sector") {
      const auto f = split(body, ',');
      if (f.size() != 5) throw Error(ErrorCode::InvalidInput, "sector needs cx,cy,r,start,extent");
      const Point c{parse_coordinate(f[0]), parse_coordinate(f[1])};
      const Rational r = parse_coordinate(f[2]);
      if (f[4] == "full") {
        parts.emplace_back(Sector::disk(c, r));
      } else {
        parts.emplace_back(Sector::make(c, r, parse_direction(f[3]), parse_direction(f[4])));
      }
    } else {
      throw Error(ErrorCode::InvalidInput, "unknown generator '" + std::string(tag) + "'");
    }
  }
  return Region(std::move(parts));
}

Xii2Record xii2_verify(const Rational& r1, const Rational& r2, unsigned depth, std::uint64_t bound) {
  if (r1 <= 0 || r2 <= 0) throw Error(ErrorCode::NonPositive, "radii must be positive");
  Xii2Record rec;
  rec.r1 = r1;
  rec.r2 = r2;
  rec.depth = depth;
  rec.bound = bound;
  const Rational s1 = 4 * r1 * r1;
  const Rational s2 = 4 * r2 * r2;
  const Rational rho = s1 / s2;
  rec.squares_ratio = rho;

  const RealEnclosure c1 = circle_content(r1);
  const RealEnclosure c2 = circle_content(r2);
  for (unsigned k = 0; k <= depth; ++k) {
    const Interval a = c1.at(k);
    const Interval b = c2.at(k);
    const Interval ratio(a.lo() / b.hi(), a.hi() / b.lo());
    rec.circle_ratio.push_back(ratio);
    if (!ratio.contains(rho)) rec.ratio_contains_squares = false;
    const Interval p1 = inscribed_outer_bounds(r1, k).inner_area;
    const Interval p2 = inscribed_outer_bounds(r2, k).inner_area;
    if (!Interval(p1.lo() / p2.hi(), p1.hi() / p2.lo()).contains(rho)) rec.polygons_similar = false;
  }
  const Interval last = rec.circle_ratio.back();

  for (std::uint64_t n1 = 1; n1 < bound; ++n1) {
    for (std::uint64_t n2 = 1; n1 + n2 <= bound; ++n2) {
      const Rational f = make_rational(Integer(static_cast<unsigned long>(n1)), Integer(static_cast<unsigned long>(n2)));
      const int side = cmp(f, rho);
      for (int branch = 1; branch <= 4; ++branch) {
        ++rec.cases;
        const bool squares = branch == 1 ? side <= 0 : branch == 2 ? side >= 0 : branch == 3 ? side < 0 : side > 0;
        if (!squares) {
          ++rec.refuted_by_squares;
          continue;
        }
        const Xii2Case here{branch, n1, n2};
        if (side == 0) {
          rec.boundary.push_back(here);
          const Rational margin = branch == 1 ? f - last.lo() : last.hi() - f;
          if (margin > rec.boundary_margin) rec.boundary_margin = margin;
          continue;
        }
        bool settled = false;
        for (unsigned k = 0; k <= depth && !settled; ++k) {
          const Interval& q = rec.circle_ratio[k];
          bool refuted = false;
          bool holds = false;
          switch (branch) {
            case 1: refuted = q.lo() >= f; holds = q.hi() < f; break;
            case 2: refuted = q.hi() <= f; holds = q.lo() > f; break;
            default: refuted = !q.contains(f); break;
          }
          if (refuted) {
            ++rec.refuted_by_enclosure;
            rec.exhaustion_steps = std::max(rec.exhaustion_steps, k);
            settled = true;
          } else if (holds) {
            rec.witnesses.push_back(here);
            settled = true;
          }
        }
        if (!settled) rec.undecided.push_back(here);
      }
    }
  }
  return rec;
}

}  // namespace eudoxos
