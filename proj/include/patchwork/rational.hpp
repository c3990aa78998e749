#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/rational.hpp>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace patchwork {

/// Exact rational with 64-bit parts. Used for planar coordinates (edge
/// midpoints, chart vertices, grid curves) whose denominators stay small.
using Rational = boost::rational<std::int64_t>;

/// Arbitrary precision rational for LP tableaux and polynomial coefficients.
using BigRational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigRational& r);

/// Accepts "p", "-p", "p/q".  Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);
BigRational parse_big_rational(std::string_view text);

/// Natural log of |r| for r != 0, safe for magnitudes far outside double range.
double log_abs(const BigRational& r);

int sign(const Rational& r);
int sign(const BigRational& r);

// boost's mixed rational/integer equality recurses under C++20 operator
// rewriting; compare against Rational(n) or use sign().
template <class I> requires std::integral<I> bool operator==(const Rational&, I) = delete;
template <class I> requires std::integral<I> bool operator==(I, const Rational&) = delete;

struct Point2 {
    Rational x{0};
    Rational y{0};

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator-(const Point2& a) { return {-a.x, -a.y}; }
inline Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }

inline Point2 midpoint(const Point2& a, const Point2& b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

inline Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }

/// Sign of the signed area of (a, b, c): +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const Point2& a, const Point2& b, const Point2& c);

/// True when p lies on the closed segment [a, b].
bool on_segment(const Point2& p, const Point2& a, const Point2& b);

/// True when the open segments (a,b) and (c,d) cross at a single interior point
/// of both.  Collinear overlaps and touching endpoints are not proper crossings.
bool segments_cross_properly(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

struct Point2Hash {
    std::size_t operator()(const Point2& p) const noexcept;
};

std::string to_string(const Point2& p);

}  // namespace patchwork
