#pragma once

// Arbitrary-precision integer and rational helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spectral {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

inline BigInt ipow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

// Floor and ceiling division; cpp_int `/` truncates toward zero.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

// Least nonnegative residue of a modulo m (m > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Largest e with base^e | value. `value` must be nonzero and base >= 2.
inline unsigned valuation(BigInt value, const BigInt& base) {
    if (value == 0) throw std::domain_error("valuation of zero is undefined");
    unsigned e = 0;
    for (;;) {
        BigInt q, r;
        boost::multiprecision::divide_qr(value, base, q, r);
        if (r != 0) return e;
        value = std::move(q);
        ++e;
    }
}

inline bool fits_int64(const BigInt& x) {
    return x >= std::numeric_limits<std::int64_t>::min() &&
           x <= std::numeric_limits<std::int64_t>::max();
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline std::string to_decimal(const Rational& x) {
    if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

/// Parses an optionally signed decimal integer; rejects anything else.
inline BigInt parse_integer(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9')
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    BigInt value(std::string(text.substr(i)));
    return text[0] == '-' ? BigInt(-value) : value;
}

/// num/den in lowest terms; the sign is moved to the numerator first, since
/// cpp_rational rejects a negative denominator.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/// Parses "a" or "a/b" into a reduced rational.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return make_rational(std::move(num), std::move(den));
}

inline bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

inline BigInt numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

}  // namespace spectral
