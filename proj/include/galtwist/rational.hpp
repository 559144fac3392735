// SPDX-License-Identifier: Apache-2.0
//
// Exact arbitrary-precision integers and rationals. cpp_rational keeps
// values fully normalized (lowest terms, positive denominator), which is
// exactly the canonical form the rest of the engine relies on.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace galtwist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Decimal rendering, "a" or "a/b" with b > 1.
inline std::string to_string(const Rational& q) { return q.str(); }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace galtwist
