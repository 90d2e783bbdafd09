// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eudoxos/enclosure.hpp"

namespace eudoxos::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "p/q", "sqrt(p/q)", "pi" and products of these joined by '*'; a factor
/// "pi/q" divides pi by q.
RealEnclosure parse_real(const std::string& text);

/// Decimal rendering of q rounded toward -inf (up = false) or +inf, with
/// `digits` fractional digits, read off a digit stream.
std::string decimal(const Rational& q, unsigned digits, bool up);

/// "[lo, hi] (width w)".
std::string render_interval(const Interval& i, unsigned digits);

}  // namespace eudoxos::cli
