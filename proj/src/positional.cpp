// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#include "eudoxos/positional.hpp"

#include "eudoxos/error.hpp"

namespace eudoxos {

namespace {

CutSide place(const Ratio& r, const Integer& m, const Integer& n, const Resolution& res) {
  const CutSide side = cut_member(r, m, n, res);
  if (side == CutSide::Unknown)
    throw Error(ErrorCode::UnknownAtResolution, "comparison undecided; raise the resolution");
  return side;
}

}  // namespace

DigitStream::DigitStream(Ratio ratio, unsigned base, Resolution res)
    : ratio_(std::move(ratio)), base_(base), res_(std::move(res)) {
  if (base_ < 2) throw Error(ErrorCode::InvalidInput, "base must be at least 2");
  if (!have_ratio(ratio_.num(), ratio_.den()))
    throw Error(ErrorCode::NotArchimedean, "magnitude and unit have no ratio");
  // Unique n0 with n0 u <= b < (n0 + 1) u.
  const Integer one(1);
  Integer lo(0);
  Integer hi(1);
  for (;;) {
    const CutSide side = place(ratio_, hi, one, res_);
    if (side == CutSide::Boundary) {
      int_part_ = hi;
      numerator_ = hi;
      terminated_ = true;
      return;
    }
    if (side == CutSide::Above) break;
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const Integer mid = (lo + hi) / 2;
    const CutSide side = place(ratio_, mid, one, res_);
    if (side == CutSide::Boundary) {
      int_part_ = mid;
      numerator_ = mid;
      terminated_ = true;
      return;
    }
    (side == CutSide::Below ? lo : hi) = mid;
  }
  int_part_ = lo;
  numerator_ = lo;
}

std::optional<unsigned> DigitStream::next() {
  if (terminated_) return std::nullopt;
  const Integer scale = scale_ * base_;
  const Integer base_num = numerator_ * base_;
  // Largest d with (base_num + d) / scale in the cut; d = 0 always is.
  unsigned lo = 0;
  unsigned hi = base_;
  bool boundary = false;
  while (hi - lo > 1) {
    const unsigned mid = lo + (hi - lo) / 2;
    const CutSide side = place(ratio_, base_num + mid, scale, res_);
    if (side == CutSide::Boundary) {
      lo = mid;
      boundary = true;
      break;
    }
    if (side == CutSide::Below)
      lo = mid;
    else
      hi = mid;
  }
  digits_.push_back(lo);
  numerator_ = base_num + lo;
  scale_ = scale;
  terminated_ = boundary;
  return lo;
}

void DigitStream::ensure(std::size_t count) {
  while (digits_.size() < count && !terminated_) next();
}

DigitStream measure_positional(const Magnitude& b, const Magnitude& u, unsigned base, const Resolution& res) {
  return DigitStream(Ratio(b, u), base, res);
}

Interval stream_to_enclosure(DigitStream& stream, std::size_t prefix_len) {
  stream.ensure(prefix_len);
  const std::size_t used = std::min(prefix_len, stream.digits().size());
  Integer num = stream.int_part();
  Integer scale(1);
  for (std::size_t i = 0; i < used; ++i) {
    num = num * stream.base() + stream.digits()[i];
    scale *= stream.base();
  }
  const Rational sum = make_rational(num, scale);
  if (stream.terminated() && stream.digits().size() <= prefix_len) return Interval(sum);
  const Rational step = make_rational(Integer(1), pow_int(Integer(stream.base()), prefix_len));
  return Interval(sum, sum + step);
}

std::string render(DigitStream& stream, std::size_t max_digits) {
  stream.ensure(max_digits);
  std::string out = stream.int_part().get_str();
  const std::size_t shown = std::min(max_digits, stream.digits().size());
  if (shown > 0) out += '.';
  for (std::size_t i = 0; i < shown; ++i) {
    const unsigned d = stream.digits()[i];
    if (d < 10)
      out += static_cast<char>('0' + d);
    else if (d < 36)
      out += static_cast<char>('a' + d - 10);
    else
      out += "{" + std::to_string(d) + "}";
  }
  out += (stream.terminated() && stream.digits().size() <= max_digits) ? " (terminated)" : "...";
  if (stream.base() != 10) out += " [base " + std::to_string(stream.base()) + "]";
  return out;
}

}  // namespace eudoxos
