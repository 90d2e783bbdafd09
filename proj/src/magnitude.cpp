// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#include "eudoxos/magnitude.hpp"

#include "eudoxos/error.hpp"

namespace eudoxos {

std::string_view to_string(KindId kind) noexcept {
  switch (kind) {
    case KindId::Naturals: return "Naturals";
    case KindId::Segments: return "Segments";
    case KindId::AnglesOfKind: return "Angles";
    case KindId::PolygonClasses: return "PolygonClasses";
    case KindId::RegionClasses: return "RegionClasses";
    case KindId::LexPairs: return "LexPairs";
  }
  return "?";
}

std::string_view to_string(Order order) noexcept {
  switch (order) {
    case Order::Less: return "Less";
    case Order::Equal: return "Equal";
    case Order::Greater: return "Greater";
    case Order::Indistinguishable: return "IndistinguishableAtResolution";
  }
  return "?";
}

bool is_exact_kind(KindId kind) noexcept {
  return kind == KindId::Naturals || kind == KindId::PolygonClasses || kind == KindId::LexPairs;
}

Resolution Resolution::with_eps(const Rational& eps) {
  if (eps <= 0) throw Error(ErrorCode::InvalidInput, "resolution must be positive");
  Resolution r;
  r.eps = eps;
  return r;
}

namespace {

RealEnclosure require_positive(const RealEnclosure& e) {
  if (e.is_exact() ? *e.exact_value() <= 0 : !e.certainly_positive())
    throw Error(ErrorCode::NonPositive, "magnitudes must be strictly positive");
  return e;
}

void require_same_kind(const Magnitude& x, const Magnitude& y) {
  if (x.kind() != y.kind())
    throw Error(ErrorCode::KindMismatch,
                std::string(to_string(x.kind())) + " vs " + std::string(to_string(y.kind())));
}

int lex_compare(const LexPair& a, const LexPair& b) {
  if (a.major != b.major) return a.major < b.major ? -1 : 1;
  if (a.minor != b.minor) return a.minor < b.minor ? -1 : 1;
  return 0;
}

Order from_sign(int s) { return s < 0 ? Order::Less : (s > 0 ? Order::Greater : Order::Equal); }

template <class T>
int sign_of(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

Order compare_enclosures(const RealEnclosure& a, const RealEnclosure& b, const Resolution& res) {
  if (a.is_exact() && b.is_exact()) return from_sign(sign_of(*a.exact_value(), *b.exact_value()));
  // Magnitude values are positive, so a common base decides the order.
  if (const auto q = a.ratio_to(b)) return from_sign(sign_of(*q, Rational(1)));
  for (unsigned k = 0; k <= res.max_depth; ++k) {
    const Interval ia = a.at(k);
    const Interval ib = b.at(k);
    if (ia.hi() < ib.lo()) return Order::Less;
    if (ia.lo() > ib.hi()) return Order::Greater;
    if (ia.width() < res.eps && ib.width() < res.eps) break;
  }
  return Order::Indistinguishable;
}

}  // namespace

Magnitude Magnitude::natural(const Integer& n) {
  if (n <= 0) throw Error(ErrorCode::NonPositive, "natural magnitudes start at 1");
  return Magnitude(KindId::Naturals, n);
}

Magnitude Magnitude::segment(const RealEnclosure& length) {
  return Magnitude(KindId::Segments, require_positive(length));
}

Magnitude Magnitude::segment(const Rational& length) { return segment(RealEnclosure::exact(length)); }

Magnitude Magnitude::angle(const RealEnclosure& measure) {
  return Magnitude(KindId::AnglesOfKind, require_positive(measure));
}

Magnitude Magnitude::polygon_class(const Rational& content) {
  if (content <= 0) throw Error(ErrorCode::NonPositive, "polygon content must be positive");
  return Magnitude(KindId::PolygonClasses, content);
}

Magnitude Magnitude::region_class(const RealEnclosure& content,
                                  std::vector<std::shared_ptr<const Region>> generators) {
  return Magnitude(KindId::RegionClasses, RegionPayload{require_positive(content), std::move(generators)});
}

Magnitude Magnitude::lex(const Integer& major, const Integer& minor) {
  if (major < 0 || minor < 0 || (major == 0 && minor == 0))
    throw Error(ErrorCode::NonPositive, "lex pairs need non-negative components, not both zero");
  return Magnitude(KindId::LexPairs, LexPair{major, minor});
}

const Integer& Magnitude::as_natural() const { return std::get<Integer>(payload_); }
const Rational& Magnitude::as_polygon_content() const { return std::get<Rational>(payload_); }
const LexPair& Magnitude::as_lex() const { return std::get<LexPair>(payload_); }
const RegionPayload& Magnitude::as_region() const { return std::get<RegionPayload>(payload_); }

RealEnclosure Magnitude::value() const {
  switch (kind_) {
    case KindId::Naturals: return RealEnclosure::exact(Rational(as_natural()));
    case KindId::PolygonClasses: return RealEnclosure::exact(as_polygon_content());
    case KindId::Segments:
    case KindId::AnglesOfKind: return std::get<RealEnclosure>(payload_);
    case KindId::RegionClasses: return as_region().content;
    case KindId::LexPairs: break;
  }
  throw Error(ErrorCode::NotArchimedean, "lex pairs have no real value");
}

std::string Magnitude::describe() const {
  std::string out(to_string(kind_));
  out += "(";
  switch (kind_) {
    case KindId::Naturals: out += as_natural().get_str(); break;
    case KindId::PolygonClasses: out += to_fraction_string(as_polygon_content()); break;
    case KindId::LexPairs: out += as_lex().major.get_str() + "," + as_lex().minor.get_str(); break;
    default: {
      const RealEnclosure v = value();
      out += v.is_exact() ? to_fraction_string(*v.exact_value()) : to_string(v.at(8));
    }
  }
  return out + ")";
}

Magnitude kmul(const Integer& n, const Magnitude& x) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "multiplier must be a positive integer");
  const Rational factor(n);
  switch (x.kind()) {
    case KindId::Naturals: return Magnitude::natural(n * x.as_natural());
    case KindId::PolygonClasses: return Magnitude::polygon_class(factor * x.as_polygon_content());
    case KindId::LexPairs: return Magnitude::lex(n * x.as_lex().major, n * x.as_lex().minor);
    case KindId::Segments: return Magnitude::segment(x.value().scaled(factor));
    case KindId::AnglesOfKind: return Magnitude::angle(x.value().scaled(factor));
    case KindId::RegionClasses: {
      if (!n.fits_ulong_p() || n > 4096)
        return Magnitude::region_class(x.value().scaled(factor), {});
      std::vector<std::shared_ptr<const Region>> gens;
      for (unsigned long i = 0; i < n.get_ui(); ++i)
        gens.insert(gens.end(), x.as_region().generators.begin(), x.as_region().generators.end());
      return Magnitude::region_class(x.value().scaled(factor), std::move(gens));
    }
  }
  throw Error(ErrorCode::KindMismatch, "unregistered kind");
}

Magnitude add(const Magnitude& x, const Magnitude& y) {
  require_same_kind(x, y);
  switch (x.kind()) {
    case KindId::Naturals: return Magnitude::natural(x.as_natural() + y.as_natural());
    case KindId::PolygonClasses: return Magnitude::polygon_class(x.as_polygon_content() + y.as_polygon_content());
    case KindId::LexPairs:
      return Magnitude::lex(x.as_lex().major + y.as_lex().major, x.as_lex().minor + y.as_lex().minor);
    case KindId::Segments: return Magnitude::segment(x.value() + y.value());
    case KindId::AnglesOfKind: return Magnitude::angle(x.value() + y.value());
    case KindId::RegionClasses: {
      auto gens = x.as_region().generators;
      gens.insert(gens.end(), y.as_region().generators.begin(), y.as_region().generators.end());
      return Magnitude::region_class(x.value() + y.value(), std::move(gens));
    }
  }
  throw Error(ErrorCode::KindMismatch, "unregistered kind");
}

Order compare(const Magnitude& x, const Magnitude& y, const Resolution& res) {
  require_same_kind(x, y);
  switch (x.kind()) {
    case KindId::Naturals: return from_sign(sign_of(x.as_natural(), y.as_natural()));
    case KindId::PolygonClasses: return from_sign(sign_of(x.as_polygon_content(), y.as_polygon_content()));
    case KindId::LexPairs: return from_sign(lex_compare(x.as_lex(), y.as_lex()));
    default: return compare_enclosures(x.value(), y.value(), res);
  }
}

Magnitude sub(const Magnitude& x, const Magnitude& y, const Resolution& res) {
  const Order order = compare(x, y, res);
  if (order == Order::Indistinguishable)
    throw Error(ErrorCode::Indistinguishable, "cannot certify x > y at this resolution");
  if (order != Order::Greater) throw Error(ErrorCode::NotGreater, "partial subtraction needs x > y");
  switch (x.kind()) {
    case KindId::Naturals: return Magnitude::natural(x.as_natural() - y.as_natural());
    case KindId::PolygonClasses: return Magnitude::polygon_class(x.as_polygon_content() - y.as_polygon_content());
    case KindId::LexPairs: {
      const Integer a = x.as_lex().major - y.as_lex().major;
      const Integer b = x.as_lex().minor - y.as_lex().minor;
      if (a < 0 || b < 0)
        throw Error(ErrorCode::NoWitness, "no non-negative pair z with y + z = x");
      return Magnitude::lex(a, b);
    }
    case KindId::Segments: return Magnitude::segment(x.value() - y.value());
    case KindId::AnglesOfKind: return Magnitude::angle(x.value() - y.value());
    case KindId::RegionClasses: return Magnitude::region_class(x.value() - y.value(), {});
  }
  throw Error(ErrorCode::KindMismatch, "unregistered kind");
}

std::optional<std::uint64_t> archimedean_witness(const Magnitude& x, const Magnitude& y, std::uint64_t bound,
                                                 const Resolution& res) {
  require_same_kind(x, y);
  // n(0, b) < (a, 0) for every n.
  if (x.kind() == KindId::LexPairs && x.as_lex().major == 0 && y.as_lex().major > 0) return std::nullopt;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    const Integer multiplier(static_cast<unsigned long>(n));
    if (compare(kmul(multiplier, x), y, res) == Order::Greater) return n;
  }
  return std::nullopt;
}

bool have_ratio(const Magnitude& x, const Magnitude& y) {
  require_same_kind(x, y);
  if (x.kind() != KindId::LexPairs) return true;
  return (x.as_lex().major == 0) == (y.as_lex().major == 0);
}

}  // namespace eudoxos
