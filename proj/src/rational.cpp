// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#include "eudoxos/rational.hpp"

#include <cctype>

#include "eudoxos/error.hpp"

namespace eudoxos {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotGreater: return "NotGreater";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::Indistinguishable: return "Indistinguishable";
    case ErrorCode::NotArchimedean: return "NotArchimedean";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::EmptySum: return "EmptySum";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::IrrationalVertex: return "IrrationalVertex";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Collinear: return "Collinear";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NotAcute: return "NotAcute";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EmptyArc: return "EmptyArc";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::UnknownAtResolution: return "UnknownAtResolution";
    case ErrorCode::NoCommonRepresentation: return "NoCommonRepresentation";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-')
    throw Error(ErrorCode::InvalidInput, "not an exact fraction: '" + std::string(text) + "'");
  return make_rational(parse_integer(num), parse_integer(den));
}

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer isqrt_floor(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::DomainError, "square root of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer isqrt_ceil(const Integer& n) {
  Integer r = isqrt_floor(n);
  if (r * r < n) ++r;
  return r;
}

Rational pow2(long exponent) {
  Rational r(1);
  if (exponent >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  return r;
}

Integer pow_int(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

namespace {

// floor(q * 4^bits) and ceil of the same.
Integer scaled_floor(const Rational& q, unsigned bits) {
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * bits);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer scaled_ceil(const Rational& q, unsigned bits) {
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * bits);
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational over_pow2(const Integer& n, unsigned bits) {
  Rational r(n);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

}  // namespace

// floor(sqrt(q) 2^b) = isqrt(floor(q 4^b)), and the ceiling analogue.
Rational sqrt_down(const Rational& q, unsigned bits) {
  if (q < 0) throw Error(ErrorCode::DomainError, "square root of a negative number");
  return over_pow2(isqrt_floor(scaled_floor(q, bits)), bits);
}

Rational sqrt_up(const Rational& q, unsigned bits) {
  if (q < 0) throw Error(ErrorCode::DomainError, "square root of a negative number");
  return over_pow2(isqrt_ceil(scaled_ceil(q, bits)), bits);
}

bool exact_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  root = make_rational(isqrt_floor(q.get_num()), isqrt_floor(q.get_den()));
  return true;
}

Rational round_down(const Rational& q, unsigned bits) {
  if (q.get_den() == 1) return q;
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  Rational out = over_pow2(r, bits);
  return out;
}

Rational round_up(const Rational& q, unsigned bits) {
  if (q.get_den() == 1) return q;
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  return over_pow2(r, bits);
}

}  // namespace eudoxos
