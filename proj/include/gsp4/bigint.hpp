#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gsp4 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& n) { return n.str(); }

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_decimal(const std::string& text);

/// Nonnegative residue of n modulo m (m > 0).
BigInt mod_floor(const BigInt& n, const BigInt& m);

/// l-adic valuation of a nonzero integer.
int valuation(BigInt n, const BigInt& prime);

bool is_prime(std::int64_t n);

}  // namespace gsp4
