#include "patchwork/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace patchwork {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const BigRational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

std::int64_t parse_int64(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("malformed integer");
    std::int64_t value = 0;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("malformed integer: " + std::string(s));
        value = value * 10 + (c - '0');
    }
    return neg ? -value : value;
}

void check_bigint_text(std::string_view s) {
    std::size_t pos = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (pos == s.size()) throw std::invalid_argument("malformed integer");
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9') throw std::invalid_argument("malformed integer: " + std::string(s));
    }
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int64(text));
    std::int64_t num = parse_int64(text.substr(0, slash));
    std::int64_t den = parse_int64(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

BigRational parse_big_rational(std::string_view text) {
    auto slash = text.find('/');
    auto strip_plus = [](std::string_view s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
    if (slash == std::string_view::npos) {
        check_bigint_text(text);
        return BigRational(BigInt(std::string(strip_plus(text))));
    }
    auto num_text = text.substr(0, slash);
    auto den_text = text.substr(slash + 1);
    check_bigint_text(num_text);
    check_bigint_text(den_text);
    BigInt den(std::string(strip_plus(den_text)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return BigRational(BigInt(std::string(strip_plus(num_text))), den);
}

double log_abs(const BigRational& r) {
    if (r == 0) throw std::domain_error("log of zero");
    long num_exp = 0;
    long den_exp = 0;
    double num_mant = mpz_get_d_2exp(&num_exp, mpq_numref(r.backend().data()));
    double den_mant = mpz_get_d_2exp(&den_exp, mpq_denref(r.backend().data()));
    return std::log(std::fabs(num_mant)) - std::log(std::fabs(den_mant)) +
           static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

int sign(const Rational& r) { return r.numerator() > 0 ? 1 : (r.numerator() < 0 ? -1 : 0); }

int sign(const BigRational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int orientation(const Point2& a, const Point2& b, const Point2& c) {
    return sign(cross(b - a, c - a));
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
    if (orientation(a, b, p) != 0) return false;
    auto lo_x = a.x < b.x ? a.x : b.x;
    auto hi_x = a.x < b.x ? b.x : a.x;
    auto lo_y = a.y < b.y ? a.y : b.y;
    auto hi_y = a.y < b.y ? b.y : a.y;
    return lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y;
}

bool segments_cross_properly(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

std::size_t Point2Hash::operator()(const Point2& p) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(p.x.numerator());
    auto mix = [&h](std::int64_t v) {
        h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(p.x.denominator());
    mix(p.y.numerator());
    mix(p.y.denominator());
    return h;
}

std::string to_string(const Point2& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

}  // namespace patchwork
