// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eudoxos/interval.hpp"
#include "eudoxos/ratio.hpp"

namespace eudoxos {

/// Base-k expansion of b : u obtained by laying off the unit and its k-fold
/// subdivisions: after i digits, (int + d1/k + ... + di/k^i) u <= b < (... +
/// (di + 1)/k^i) u. A subdivision point hit exactly ends the stream.
///
/// Digits are produced lazily. Copies snapshot the emitted prefix.
class DigitStream {
 public:
  DigitStream(Ratio ratio, unsigned base, Resolution res);

  unsigned base() const { return base_; }
  const Integer& int_part() const { return int_part_; }
  const std::vector<unsigned>& digits() const { return digits_; }
  bool terminated() const { return terminated_; }

  /// Next digit, or nullopt once terminated. Throws
  /// Error{UnknownAtResolution} when a digit cannot be placed.
  std::optional<unsigned> next();

  /// Pulls digits until `count` are available or the stream ends.
  void ensure(std::size_t count);

 private:
  Ratio ratio_;
  unsigned base_;
  Resolution res_;
  Integer int_part_;
  std::vector<unsigned> digits_;
  bool terminated_ = false;
  Integer numerator_;  // int_part * base^i + digits, over scale_
  Integer scale_{1};
};

DigitStream measure_positional(const Magnitude& b, const Magnitude& u, unsigned base, const Resolution& res = {});

/// [s, s + base^-prefix_len] for the partial sum s of the first prefix_len
/// digits; the point s when the stream ends within the prefix.
Interval stream_to_enclosure(DigitStream& stream, std::size_t prefix_len);

/// "int.d1d2..." followed by " (terminated)" or "...", and " [base k]" when
/// k != 10. Digits above 9 use letters up to base 36, then "{d}".
std::string render(DigitStream& stream, std::size_t max_digits);

}  // namespace eudoxos
