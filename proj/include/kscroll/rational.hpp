#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace kscroll {

/// Exact rational number, always normalized (lowest terms, positive denominator).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec3 = std::array<Rational, 3>;
using IVec3 = std::array<std::int64_t, 3>;

inline Rational rat(std::int64_t p, std::int64_t q = 1) { return Rational(Integer(p), Integer(q)); }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q" and "-p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Decimal rendering truncated toward zero to `digits` fractional digits.
/// Display only; never fed back into a computation.
std::string to_decimal(const Rational& r, int digits);

inline Vec3 to_vec3(const IVec3& v) { return {Rational(v[0]), Rational(v[1]), Rational(v[2])}; }

inline Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline Rational det3(const Vec3& a, const Vec3& b, const Vec3& c)
{
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace kscroll
