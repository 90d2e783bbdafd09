// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eudoxos/enclosure.hpp"
#include "eudoxos/rational.hpp"

namespace eudoxos {

class Region;

/// The statically registered kinds. Universes are pairwise disjoint: no
/// operation ever combines magnitudes of two different kinds.
enum class KindId { Naturals, Segments, AnglesOfKind, PolygonClasses, RegionClasses, LexPairs };

std::string_view to_string(KindId kind) noexcept;

/// Exact kinds decide every comparison; enclosure-backed kinds are only
/// semi-decidable.
bool is_exact_kind(KindId kind) noexcept;

/// Element of the non-Archimedean quasi-kind: pairs ordered
/// lexicographically, added componentwise. (0, b) is infinitesimal relative to
/// (a, 0) for a >= 1.
struct LexPair {
  Integer major;
  Integer minor;
  friend bool operator==(const LexPair&, const LexPair&) = default;
};

/// Region-class payload: content enclosure plus the regions whose
/// (translated, essentially-disjoint) union the magnitude stands for. Results
/// of subtraction carry no generators.
struct RegionPayload {
  RealEnclosure content;
  std::vector<std::shared_ptr<const Region>> generators;
};

/// Comparison threshold for enclosure-backed kinds.
struct Resolution {
  Rational eps = pow2(-53);
  unsigned max_depth = 160;

  static Resolution with_eps(const Rational& eps);
};

enum class Order { Less, Equal, Greater, Indistinguishable };

std::string_view to_string(Order order) noexcept;

/// A strictly positive element of one registered kind.
class Magnitude {
 public:
  static Magnitude natural(const Integer& n);
  static Magnitude segment(const RealEnclosure& length);
  static Magnitude segment(const Rational& length);
  /// Angle magnitude, carried by its measure in radians (windings included).
  static Magnitude angle(const RealEnclosure& measure);
  static Magnitude polygon_class(const Rational& content);
  static Magnitude region_class(const RealEnclosure& content,
                                std::vector<std::shared_ptr<const Region>> generators);
  static Magnitude lex(const Integer& major, const Integer& minor);

  KindId kind() const { return kind_; }

  const Integer& as_natural() const;
  const Rational& as_polygon_content() const;
  const LexPair& as_lex() const;
  const RegionPayload& as_region() const;
  /// Value enclosure for every kind except LexPairs.
  RealEnclosure value() const;

  std::string describe() const;

 private:
  using Payload = std::variant<Integer, RealEnclosure, Rational, LexPair, RegionPayload>;
  Magnitude(KindId kind, Payload payload) : kind_(kind), payload_(std::move(payload)) {}

  KindId kind_;
  Payload payload_;
};

/// n-fold sum x + ... + x, n >= 1.
Magnitude kmul(const Integer& n, const Magnitude& x);
Magnitude add(const Magnitude& x, const Magnitude& y);
Order compare(const Magnitude& x, const Magnitude& y, const Resolution& res = {});
/// x - y; requires compare(x, y) == Greater.
Magnitude sub(const Magnitude& x, const Magnitude& y, const Resolution& res = {});

/// Least n <= bound with kmul(n, x) > y, if any.
std::optional<std::uint64_t> archimedean_witness(const Magnitude& x, const Magnitude& y, std::uint64_t bound,
                                                 const Resolution& res = {});

/// Whether x and y have a ratio, i.e. each is exceeded by some multiple of
/// the other. Always true for the Archimedean kinds.
bool have_ratio(const Magnitude& x, const Magnitude& y);

}  // namespace eudoxos
