// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

// Sampled checks of the equivalences between =_E, =_L, cancellation and the
// cut partition, plus witnesses of their failure in the lexicographic
// quasi-kind.

#include <algorithm>
#include <numeric>

#include "eudoxos/error.hpp"
#include "eudoxos/ratio.hpp"

namespace eudoxos {

namespace {

using Status = ProportionResult::Status;

struct Sample {
  std::string kind;
  std::vector<Magnitude> magnitudes;
};

std::vector<Sample> archimedean_samples() {
  std::vector<Sample> out;
  Sample naturals{"Naturals", {}};
  for (long v = 1; v <= 4; ++v) naturals.magnitudes.push_back(Magnitude::natural(Integer(v)));
  out.push_back(std::move(naturals));
  Sample segments{"Segments", {}};
  segments.magnitudes.push_back(Magnitude::segment(Rational(1)));
  segments.magnitudes.push_back(Magnitude::segment(RealEnclosure::sqrt(Rational(2))));
  segments.magnitudes.push_back(Magnitude::segment(RealEnclosure::sqrt(Rational(3))));
  segments.magnitudes.push_back(Magnitude::segment(make_rational(3, 2)));
  out.push_back(std::move(segments));
  return out;
}

std::vector<Ratio> ratios_of(const Sample& s) {
  std::vector<Ratio> out;
  for (const auto& x : s.magnitudes)
    for (const auto& y : s.magnitudes) out.emplace_back(x, y);
  return out;
}

ClauseCheck check_e_equals_l(const Sample& s, std::uint64_t bound) {
  ClauseCheck c{"=_E agrees with =_L", s.kind, true, 0, {}};
  const auto ratios = ratios_of(s);
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    for (std::size_t j = i; j < ratios.size(); ++j) {
      const auto e = eq_E(ratios[i], ratios[j], bound);
      const auto l = eq_L(ratios[i], ratios[j], bound);
      ++c.cases;
      if (e.status != l.status || e.status == Status::Undecided) {
        c.passed = false;
        c.detail = "disagreement at sample pair " + std::to_string(i) + "," + std::to_string(j);
        return c;
      }
    }
  }
  return c;
}

ClauseCheck check_cancellation(const Sample& s, std::uint64_t bound) {
  ClauseCheck c{"<x,z> =_E <y,z> implies x = y", s.kind, true, 0, {}};
  for (const auto& z : s.magnitudes) {
    for (std::size_t i = 0; i < s.magnitudes.size(); ++i) {
      for (std::size_t j = i; j < s.magnitudes.size(); ++j) {
        const auto& x = s.magnitudes[i];
        const auto& y = s.magnitudes[j];
        ++c.cases;
        const auto e = eq_E(Ratio(x, z), Ratio(y, z), bound);
        if (e.status == Status::Undecided) {
          c.passed = false;
          c.detail = "undecided proportion";
          return c;
        }
        const bool equal = compare(x, y) == Order::Equal;
        if ((e.status == Status::Proportional) != equal) {
          c.passed = false;
          c.detail = x.describe() + " vs " + y.describe() + " over " + z.describe();
          return c;
        }
      }
    }
  }
  return c;
}

struct Fraction {
  std::uint64_t m, n;
  Rational value() const { return make_rational(Integer(static_cast<unsigned long>(m)), Integer(static_cast<unsigned long>(n))); }
};

ClauseCheck check_partition(const Sample& s, std::uint64_t bound) {
  ClauseCheck c{"cut and co-cut partition Q+", s.kind, true, 0, {}};
  std::vector<Fraction> fractions;
  for (std::uint64_t m = 1; m <= bound; ++m)
    for (std::uint64_t n = 1; n <= bound; ++n)
      if (std::gcd(m, n) == 1) fractions.push_back({m, n});
  std::sort(fractions.begin(), fractions.end(),
            [](const Fraction& a, const Fraction& b) { return a.value() < b.value(); });
  for (const auto& r : ratios_of(s)) {
    ++c.cases;
    bool seen_out = false;
    bool seen_in = false;
    for (const auto& f : fractions) {
      const CutSide side = cut_member(r, Integer(static_cast<unsigned long>(f.m)),
                                      Integer(static_cast<unsigned long>(f.n)));
      if (side == CutSide::Unknown) {
        c.passed = false;
        c.detail = "membership unknown for " + r.num().describe() + ":" + r.den().describe();
        return c;
      }
      const bool in = side != CutSide::Above;
      if (in && seen_out) {
        c.passed = false;
        c.detail = "cut is not an initial segment";
        return c;
      }
      seen_in = seen_in || in;
      seen_out = seen_out || !in;
    }
    if (!seen_in || !seen_out) {
      c.passed = false;
      c.detail = "cut empty or full within the sampled fractions";
      return c;
    }
  }
  return c;
}

std::vector<LexPair> lex_elements(long max_sum) {
  // Ordered by component sum, then by the major component descending.
  std::vector<LexPair> out;
  for (long s = 1; s <= max_sum; ++s)
    for (long a = s; a >= 0; --a) out.push_back(LexPair{Integer(a), Integer(s - a)});
  return out;
}

Magnitude lex(const LexPair& p) { return Magnitude::lex(p.major, p.minor); }

}  // namespace

bool PropositionReport::passed() const {
  for (const auto& c : clauses)
    if (!c.passed) return false;
  return separation.has_value() && cancellation_failure.has_value() && empty_cut.has_value();
}

PropositionReport proposition_suite(std::uint64_t bound) {
  if (bound < 2) throw Error(ErrorCode::InvalidInput, "proposition suite needs bound >= 2");
  PropositionReport report;
  for (const auto& s : archimedean_samples()) {
    report.clauses.push_back(check_e_equals_l(s, bound));
    report.clauses.push_back(check_cancellation(s, bound));
    report.clauses.push_back(check_partition(s, bound));
  }

  const auto elements = lex_elements(2);
  for (const auto& y : elements) {
    for (std::size_t i = 0; i < elements.size() && !report.separation; ++i) {
      for (std::size_t j = 0; j < i && !report.separation; ++j) {
        const Ratio r1(lex(elements[i]), lex(y));
        const Ratio r2(lex(elements[j]), lex(y));
        if (eq_L(r1, r2, bound).status == Status::Proportional &&
            eq_E(r1, r2, bound).status == Status::NotProportional)
          report.separation = LexWitness{elements[i], y, elements[j], y};
      }
    }
    if (report.separation) break;
  }

  for (const auto& z : elements) {
    for (std::size_t i = 0; i < elements.size() && !report.cancellation_failure; ++i) {
      for (std::size_t j = i + 1; j < elements.size() && !report.cancellation_failure; ++j) {
        if (eq_E(Ratio(lex(elements[i]), lex(z)), Ratio(lex(elements[j]), lex(z)), bound).status ==
            Status::Proportional)
          report.cancellation_failure = LexWitness{elements[i], z, elements[j], z};
      }
    }
    if (report.cancellation_failure) break;
  }

  for (const auto& x : elements) {
    for (const auto& y : elements) {
      // m y <= n x fails for every m, n exactly when x is infinitesimal and y is not.
      if (x.major == 0 && y.major > 0) {
        const Ratio r(lex(x), lex(y));
        bool empty = true;
        for (std::uint64_t m = 1; m <= bound && empty; ++m)
          for (std::uint64_t n = 1; n <= bound && empty; ++n)
            empty = cut_member(r, Integer(static_cast<unsigned long>(m)), Integer(static_cast<unsigned long>(n))) ==
                    CutSide::Above;
        if (empty) report.empty_cut = std::make_pair(x, y);
        break;
      }
    }
    if (report.empty_cut) break;
  }
  return report;
}

}  // namespace eudoxos
