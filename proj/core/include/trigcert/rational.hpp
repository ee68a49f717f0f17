#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

namespace trigcert {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline integer int_pow(const integer& base, unsigned e) {
    integer r = 1;
    integer b = base;
    unsigned n = e;
    while (n > 0) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

// q^e for integer e, with negative exponents allowed (q must be nonzero then).
inline rational rat_pow(const rational& q, int e) {
    if (e == 0) return rational(1);
    if (e < 0) {
        if (q == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        return rational(1) / rat_pow(q, -e);
    }
    rational r = 1, b = q;
    unsigned n = static_cast<unsigned>(e);
    while (n > 0) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline rational factorial(unsigned n) {
    integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return rational(r);
}

inline rational binomial(unsigned n, unsigned k) {
    if (k > n) return rational(0);
    integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return rational(r);
}

// Exact rational value of a finite double.
inline rational rational_from_double(double d) {
    if (!std::isfinite(d)) throw std::domain_error("rational_from_double: non-finite input");
    if (d == 0.0) return rational(0);
    int exp = 0;
    double m = std::frexp(d, &exp);  // d = m * 2^exp, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    integer num = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    rational r(num);
    if (exp > 0) r *= rational(int_pow(integer(2), static_cast<unsigned>(exp)));
    else if (exp < 0) r /= rational(int_pow(integer(2), static_cast<unsigned>(-exp)));
    return r;
}

// Largest double <= q (round toward -infinity).
inline double to_double_down(const rational& q) {
    double d = q.convert_to<double>();
    if (!std::isfinite(d)) {
        if (d > 0) return std::numeric_limits<double>::max();
        return -std::numeric_limits<double>::infinity();
    }
    if (rational_from_double(d) > q) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
    // convert_to rounding mode is implementation detail; one extra guard step
    if (rational_from_double(d) > q) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
    return d;
}

// Smallest double >= q (round toward +infinity).
inline double to_double_up(const rational& q) {
    double d = q.convert_to<double>();
    if (!std::isfinite(d)) {
        if (d < 0) return std::numeric_limits<double>::lowest();
        return std::numeric_limits<double>::infinity();
    }
    if (rational_from_double(d) < q) d = std::nextafter(d, std::numeric_limits<double>::infinity());
    if (rational_from_double(d) < q) d = std::nextafter(d, std::numeric_limits<double>::infinity());
    return d;
}

inline std::string rational_to_string(const rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

}  // namespace trigcert
