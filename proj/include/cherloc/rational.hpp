#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over arbitrary-precision integers.
 *
 * Every decision in this library (hyperplane membership, content signs,
 * matchings) is made on exact values. Floating point never enters a
 * decision path.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cherloc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) return Rational(-BigInt(num), -BigInt(den));
    return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

/// Largest integer not exceeding q.
inline BigInt floor_of(const Rational& q) {
    BigInt num = numerator_of(q);
    BigInt den = denominator_of(q);
    BigInt quot = num / den;  // truncates toward zero
    if (num < 0 && quot * den != num) --quot;
    return quot;
}

inline BigInt ceil_of(const Rational& q) { return -floor_of(-q); }

inline BigInt lcm_of(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    BigInt g = boost::multiprecision::gcd(a, b);
    BigInt r = a / g * b;
    return r < 0 ? BigInt(-r) : r;
}

/// Canonical "num/den" form: den > 0, gcd 1, zero is "0/1".
inline std::string to_string(const Rational& q) {
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

namespace detail {

inline BigInt parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t pos = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    BigInt value = 0;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace detail

/// Parses "p", "p/q" (optionally signed). Accepts non-reduced input.
inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(s));
    BigInt num = detail::parse_integer(s.substr(0, slash));
    std::string_view den_text = s.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-'))
        throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    BigInt den = detail::parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(s) + "'");
    return Rational(num, den);
}

}  // namespace cherloc
