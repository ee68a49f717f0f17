#pragma once

#include <algorithm>
#include <stdexcept>

#include "trigcert/interval.hpp"
#include "trigcert/rational.hpp"

namespace trigcert {

// Interval with exact rational endpoints; operations are exact (no rounding),
// so enclosure widths grow only through genuine dependency, never roundoff.
struct rational_interval {
    rational lo = 0;
    rational hi = 0;

    rational_interval() = default;
    rational_interval(rational point) : lo(point), hi(std::move(point)) {}
    rational_interval(rational l, rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("rational_interval: lo > hi");
    }

    rational width() const { return hi - lo; }
    rational mid() const { return (lo + hi) / 2; }
    bool contains(const rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    // -1 if entirely negative, +1 if entirely positive, 0 if zero is inside.
    int sign() const {
        if (hi < 0) return -1;
        if (lo > 0) return 1;
        return 0;
    }

    interval to_interval() const { return interval(to_double_down(lo), to_double_up(hi)); }
};

inline rational_interval operator+(const rational_interval& a, const rational_interval& b) {
    return rational_interval(a.lo + b.lo, a.hi + b.hi);
}

inline rational_interval operator-(const rational_interval& a, const rational_interval& b) {
    return rational_interval(a.lo - b.hi, a.hi - b.lo);
}

inline rational_interval operator-(const rational_interval& a) {
    return rational_interval(-a.hi, -a.lo);
}

inline rational_interval operator*(const rational_interval& a, const rational_interval& b) {
    rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return rational_interval(std::move(lo), std::move(hi));
}

inline rational_interval operator/(const rational_interval& a, const rational_interval& b) {
    if (b.contains_zero()) throw std::domain_error("rational_interval division by zero-straddling interval");
    rational p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return rational_interval(std::move(lo), std::move(hi));
}

inline rational_interval ri_pow(const rational_interval& a, int e) {
    if (e == 0) return rational_interval(rational(1));
    if (e < 0) return rational_interval(rational(1)) / ri_pow(a, -e);
    if (e % 2 == 0 && a.contains_zero()) {
        return rational_interval(rational(0), rat_pow(std::max(rational(-a.lo), a.hi), e));
    }
    return rational_interval(std::min(rat_pow(a.lo, e), rat_pow(a.hi, e)),
                             std::max(rat_pow(a.lo, e), rat_pow(a.hi, e)));
}

inline rational_interval ri_hull(const rational_interval& a, const rational_interval& b) {
    return rational_interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

// Largest multiple of 2^-bits that is <= q. Dyadic endpoints keep long
// iteration chains from accumulating gigantic numerators and denominators.
inline rational dyadic_round_down(const rational& q, unsigned bits) {
    const integer n = integer(boost::multiprecision::numerator(q)) << bits;
    const integer d(boost::multiprecision::denominator(q));
    integer quot = n / d;
    if (n < 0 && quot * d != n) --quot;
    return rational(quot, int_pow(integer(2), bits));
}

inline rational dyadic_round_up(const rational& q, unsigned bits) {
    return -dyadic_round_down(-q, bits);
}

inline rational_interval ri_round_out(const rational_interval& v, unsigned bits) {
    return rational_interval(dyadic_round_down(v.lo, bits), dyadic_round_up(v.hi, bits));
}

}  // namespace trigcert
