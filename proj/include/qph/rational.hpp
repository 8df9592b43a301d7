#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qph {

// Exact scalars. Rational is kept in canonical form by the backend:
// denominator > 0 and gcd(|num|, den) = 1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace qph
