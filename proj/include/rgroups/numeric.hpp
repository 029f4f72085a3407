#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rgroups {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// base^exp over unbounded integers (exp >= 0).
BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Largest r >= 0 with r^q <= x. Requires x >= 0, q >= 1.
BigInt iroot_floor(const BigInt& x, std::uint64_t q);

/// floor(base^e) for base >= 1 and a nonnegative exact rational exponent,
/// computed as the integer q-th root of base^p where e = p/q in lowest terms.
BigInt floor_pow(const BigInt& base, const BigRat& e);

/// ceil(base^e), same contract as floor_pow.
BigInt ceil_pow(const BigInt& base, const BigRat& e);

/// Parses "p/q" or a bare integer "p" (q = 1). Throws std::invalid_argument
/// on malformed input or q == 0. The result is in lowest terms.
BigRat parse_rational(std::string_view text);

/// Writes a rational as "p/q" in lowest terms (denominator printed even
/// when it is 1, so the form round-trips through parse_rational).
std::string rational_to_string(const BigRat& r);

}  // namespace rgroups
