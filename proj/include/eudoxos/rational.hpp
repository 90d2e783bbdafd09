// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eudoxos {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonicalized rational p/q.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Parses "p", "p/q" or "-p/q". Throws Error{InvalidInput}.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_fraction_string(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// floor(sqrt(n)) and ceil(sqrt(n)) for n >= 0.
Integer isqrt_floor(const Integer& n);
Integer isqrt_ceil(const Integer& n);

/// Largest multiple of 2^-bits that is <= sqrt(q) (resp. smallest >= sqrt(q)).
Rational sqrt_down(const Rational& q, unsigned bits);
Rational sqrt_up(const Rational& q, unsigned bits);

/// Exact square root if q is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

/// Outward dyadic rounding to a 2^-bits grid.
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

Rational pow2(long exponent);
Integer pow_int(const Integer& base, unsigned long exponent);

}  // namespace eudoxos
