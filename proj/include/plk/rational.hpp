#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace plk {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// A point in some R^n with exact coordinates.
using Point = std::vector<Rational>;

// Accepts "p/q" or an integer; anything else (decimals, exponents) is rejected.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Decimal rendering rounded half away from zero with `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits);

Rational factorial(std::size_t n);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& a);
Rational dot(const Point& a, const Point& b);

// Arithmetic mean of the given points.
Point barycenter(const std::vector<Point>& pts);

std::string to_string(const Point& p);

}  // namespace plk
