// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eudoxos/magnitude.hpp"

namespace eudoxos {

/// Ordered pair of same-kind magnitudes.
class Ratio {
 public:
  Ratio(Magnitude num, Magnitude den);

  const Magnitude& num() const { return num_; }
  const Magnitude& den() const { return den_; }
  KindId kind() const { return num_.kind(); }

  static Ratio naturals(long num, long den);

 private:
  Magnitude num_;
  Magnitude den_;
};

enum class CutSide { Below, Above, Boundary, Unknown };

std::string_view to_string(CutSide side) noexcept;

/// Default search bound for the bounded witness scans.
inline constexpr std::uint64_t kDefaultSearchBound = 10'000;

/// Position of the fraction m/n relative to the cut of r = x:y, i.e. the
/// comparison of m*y with n*x. m/n is in the cut iff Below or Boundary.
CutSide cut_member(const Ratio& r, const Integer& m, const Integer& n, const Resolution& res = {});

struct Witness {
  std::uint64_t m;
  std::uint64_t n;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ProportionResult {
  enum class Status { Proportional, NotProportional, Undecided };
  Status status;
  /// Set for NotProportional: the least fraction m/n (by m + n, then m) at
  /// which the two ratios are told apart.
  std::optional<Witness> witness;
};

std::string_view to_string(ProportionResult::Status status) noexcept;

/// Sameness of ratio by equimultiples: every m/n with m, n <= bound lands on
/// the same side (Below / Boundary / Above) for both ratios.
ProportionResult eq_E(const Ratio& r1, const Ratio& r2, std::uint64_t bound = kDefaultSearchBound,
                      const Resolution& res = {});

/// Equality of cuts restricted to m, n <= bound.
ProportionResult eq_L(const Ratio& r1, const Ratio& r2, std::uint64_t bound = kDefaultSearchBound,
                      const Resolution& res = {});

enum class LessResult { Less, NotLess, Undecided };

std::string_view to_string(LessResult result) noexcept;

/// r1 < r2 iff r2 has the greater ratio: for some equimultiples,
/// m*r2.num > n*r2.den while m*r1.num <= n*r1.den.
LessResult less_E(const Ratio& r1, const Ratio& r2, std::uint64_t bound = kDefaultSearchBound,
                  const Resolution& res = {});

/// Segment u with r = u : w, built exactly for rational-valued ratios, by
/// enclosure arithmetic for segment ratios, and through to_real otherwise.
Magnitude fourth_proportional(const Ratio& r, const Magnitude& w);

/// (u + v) : w for r1 = u : w and r2 = v : w over a unit segment w.
Ratio add_ratio(const Ratio& r1, const Ratio& r2);
/// u : v for r1 = u : w and r2 = w : v.
Ratio mul_ratio(const Ratio& r1, const Ratio& r2);
Ratio inverse(const Ratio& r);
/// (m/n) r = m x : n y for r = x : y.
Ratio scale_rational(const Integer& m, const Integer& n, const Ratio& r);

/// Real number of the ratio, read off its cut: at depth k the bracket
/// [j/2^k, (j+1)/2^k] around the cut boundary (a point when the boundary is
/// hit exactly). Throws Error{NotArchimedean} for pairs without a ratio.
RealEnclosure to_real(const Ratio& r);

/// Outcome of the equivalence checks between =_E, =_L and Archimedean
/// behaviour, sampled at a finite bound.
struct ClauseCheck {
  std::string clause;
  std::string kind;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
};

/// <x, y> versus <z, w> inside the non-Archimedean quasi-kind.
struct LexWitness {
  LexPair x, y, z, w;
};

struct PropositionReport {
  std::vector<ClauseCheck> clauses;
  /// =_L-equal but =_E-unequal pair of ratios.
  std::optional<LexWitness> separation;
  /// x != y although <x, z> =_E <y, z>.
  std::optional<LexWitness> cancellation_failure;
  /// x : y whose cut is empty, so cut and co-cut do not partition Q+.
  std::optional<std::pair<LexPair, LexPair>> empty_cut;

  bool passed() const;
};

PropositionReport proposition_suite(std::uint64_t bound);

}  // namespace eudoxos
