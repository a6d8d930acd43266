#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypc {

// Exact rational scalar. The whole core runs on these; floating point is
// confined to the numeric minimization oracle.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rabs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Sign with sgn(0) = +1. Every witness construction uses this convention so
// that results are deterministic.
inline int sgn_pos(const Rational& r) { return r < 0 ? -1 : 1; }

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical "p/q" with q > 0 and gcd(p, q) = 1 (integers render as "p/1").
std::string format_rational(const Rational& r);

// Accepts "p" or "p/q" with optional leading '-'. Throws ParseError on
// malformed input or q = 0.
Rational parse_rational(std::string_view s);

}  // namespace hypc
