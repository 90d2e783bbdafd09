// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#include "eudoxos/enclosure.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <vector>

#include "eudoxos/error.hpp"

namespace eudoxos {

unsigned rounding_bits(unsigned depth) { return 2 * depth + 64; }

RealEnclosure RealEnclosure::exact(const Rational& value) {
  auto refine = std::make_shared<const Refiner>([value](unsigned) { return Interval(value); });
  return RealEnclosure(std::move(refine), value);
}

RealEnclosure RealEnclosure::sqrt(const Rational& q) {
  if (q < 0) throw Error(ErrorCode::DomainError, "square root of a negative rational");
  Rational root;
  if (exact_sqrt(q, root)) return exact(root);
  // floor/ceil on a 2^-bits grid refine monotonically as bits grow.
  return from_nested([q](unsigned depth) {
    const unsigned bits = depth + 1;
    return Interval(sqrt_down(q, bits), sqrt_up(q, bits));
  });
}

namespace {

// Memoizes a refiner; computation happens outside the lock.
class Memo {
 public:
  explicit Memo(RealEnclosure::Refiner f) : f_(std::move(f)) {}

  Interval get(unsigned depth) {
    {
      std::lock_guard lock(mu_);
      if (depth < done_.size() && done_[depth]) return *done_[depth];
    }
    Interval value = f_(depth);
    std::lock_guard lock(mu_);
    if (depth >= done_.size()) done_.resize(depth + 1);
    done_[depth] = value;
    return value;
  }

 private:
  RealEnclosure::Refiner f_;
  std::mutex mu_;
  std::vector<std::optional<Interval>> done_;
};

// Running intersection of raw(0..k), extended on demand.
class RawChain {
 public:
  explicit RawChain(RealEnclosure::Refiner raw) : raw_(std::move(raw)) {}

  Interval get(unsigned depth) {
    std::lock_guard lock(mu_);
    while (acc_.size() <= depth) {
      const Interval next = raw_(static_cast<unsigned>(acc_.size()));
      if (acc_.empty()) {
        acc_.push_back(next);
      } else {
        const Interval& prev = acc_.back();
        acc_.emplace_back(std::max(prev.lo(), next.lo()), std::min(prev.hi(), next.hi()));
      }
    }
    return acc_[depth];
  }

 private:
  RealEnclosure::Refiner raw_;
  std::mutex mu_;
  std::vector<Interval> acc_;
};

}  // namespace

RealEnclosure RealEnclosure::from_nested(Refiner refine) {
  auto memo = std::make_shared<Memo>(std::move(refine));
  return RealEnclosure(std::make_shared<const Refiner>([memo](unsigned depth) { return memo->get(depth); }),
                       std::nullopt);
}

RealEnclosure RealEnclosure::from_raw(Refiner raw) {
  auto chain = std::make_shared<RawChain>(std::move(raw));
  return RealEnclosure(std::make_shared<const Refiner>([chain](unsigned depth) { return chain->get(depth); }),
                       std::nullopt);
}

Interval RealEnclosure::at(unsigned depth) const { return (*refine_)(depth); }

bool RealEnclosure::same_representation(const RealEnclosure& other) const {
  if (exact_ && other.exact_) return *exact_ == *other.exact_;
  if (exact_ || other.exact_) return false;
  return base_ == other.base_ && factor_ == other.factor_;
}

std::optional<Rational> RealEnclosure::ratio_to(const RealEnclosure& other) const {
  if (exact_ && other.exact_) {
    if (*other.exact_ == 0) return std::nullopt;
    return Rational(*exact_ / *other.exact_);
  }
  if (exact_ || other.exact_ || base_ != other.base_ || other.factor_ == 0) return std::nullopt;
  return Rational(factor_ / other.factor_);
}

bool RealEnclosure::certainly_positive(unsigned max_depth) const {
  for (unsigned k = 0; k <= max_depth; ++k)
    if (at(k).lo() > 0) return true;
  return false;
}

RealEnclosure RealEnclosure::scaled(const Rational& factor) const {
  if (exact_) return exact(factor * *exact_);
  RealEnclosure out = from_nested([a = *this, factor](unsigned depth) { return factor * a.at(depth); });
  out.base_ = base_;
  out.factor_ = factor * factor_;
  return out;
}

RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b) {
  if (a.exact_ && b.exact_) return RealEnclosure::exact(*a.exact_ + *b.exact_);
  return RealEnclosure::from_nested(
      [a, b](unsigned depth) { return (a.at(depth) + b.at(depth)).rounded(rounding_bits(depth)); });
}

RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b) {
  if (a.exact_ && b.exact_) return RealEnclosure::exact(*a.exact_ - *b.exact_);
  return RealEnclosure::from_nested(
      [a, b](unsigned depth) { return (a.at(depth) - b.at(depth)).rounded(rounding_bits(depth)); });
}

RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b) {
  if (a.exact_ && b.exact_) return RealEnclosure::exact(*a.exact_ * *b.exact_);
  return RealEnclosure::from_nested(
      [a, b](unsigned depth) { return (a.at(depth) * b.at(depth)).rounded(rounding_bits(depth)); });
}

RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b) {
  if (b.exact_ && *b.exact_ == 0) throw Error(ErrorCode::DomainError, "division by zero");
  if (a.exact_ && b.exact_) return RealEnclosure::exact(*a.exact_ / *b.exact_);
  // The first depth at which b excludes zero; nested thereafter.
  constexpr unsigned kSearch = 256;
  unsigned first = 0;
  while (b.at(first).contains(Rational(0))) {
    if (++first > kSearch) throw Error(ErrorCode::DomainError, "divisor not separated from zero");
  }
  return RealEnclosure::from_nested([a, b, first](unsigned depth) {
    const unsigned k = std::max(depth, first);
    return (a.at(k) / b.at(k)).rounded(rounding_bits(depth));
  });
}

}  // namespace eudoxos
