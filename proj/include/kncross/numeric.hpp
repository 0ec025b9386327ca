#pragma once

#include <string>

#include <gmpxx.h>

namespace kncross {

using BigInt = mpz_class;
using Rational = mpq_class;
using BigFloat = mpf_class;

/// Working precision (bits) for decimal evaluation; about 75 significant digits.
inline constexpr mp_bitcnt_t kFloatPrecision = 256;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

/// Exact rational rendered as "p/q" (or "p" when integral).
inline std::string to_fraction(const Rational& value) { return value.get_str(10); }

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const BigFloat& value, int digits);

/// Exact rational rounded half away from zero to `places` decimals.
std::string to_fixed(const Rational& value, int places);

BigInt binomial(long n, long k);

}  // namespace kncross
