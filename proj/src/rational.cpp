#include "plk/rational.hpp"

#include "plk/errors.hpp"

#include <algorithm>
#include <cctype>

namespace plk {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                           : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
        den.front() == '+')
        throw StructuralError("not an exact rational: '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Integer p(n), q{std::string(den)};
    if (q == 0) throw StructuralError("zero denominator: '" + std::string(text) + "'");
    return Rational(p, q);
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_decimal(const Rational& q, int digits) {
    if (digits < 0) throw StructuralError("negative precision");
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer num = abs(numerator(q)) * scale;
    Integer den = denominator(q);
    Integer scaled = num / den;
    if ((num % den) * 2 >= den) scaled += 1;
    std::string s = scaled.str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    bool negative = q < 0 && s.find_first_not_of("0.") != std::string::npos;
    return negative ? "-" + s : s;
}

Rational factorial(std::size_t n) {
    Rational r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
    return r;
}

Point operator+(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Point operator-(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Point operator*(const Rational& s, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Rational dot(const Point& a, const Point& b) {
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

Point barycenter(const std::vector<Point>& pts) {
    Point r(pts.front().size(), Rational(0));
    for (const auto& p : pts) r = r + p;
    return Rational(1, static_cast<long>(pts.size())) * r;
}

std::string to_string(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += to_string(p[i]);
    }
    return s + ")";
}

}  // namespace plk
