#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fthresh {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

// "num/den" or "num"; whitespace not allowed.
Rational parse_rational(std::string_view text);
std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
// Display-only decimal rendering with k digits after the point (truncated toward zero).
std::string to_decimal(const Rational& v, unsigned digits);

BigInt floor(const Rational& v);
BigInt ceil(const Rational& v);

BigInt ipow(const BigInt& base, unsigned exp);
BigInt ipow(unsigned long base, unsigned exp);

bool is_prime(unsigned long p);

bool fits_u64(const BigInt& v);
std::uint64_t to_u64(const BigInt& v);

}  // namespace fthresh
