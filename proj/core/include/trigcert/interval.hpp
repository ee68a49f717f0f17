#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trigcert/rational.hpp"

namespace trigcert {

// Closed double interval with outward rounding: every operation widens its
// result by one ulp per endpoint, so the exact real result of the operation
// applied to any members of the inputs is contained in the output.
struct interval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty_flag = false;

    interval() = default;
    interval(double point) : lo(point), hi(point) {}
    interval(double l, double h) : lo(l), hi(h) {
        if (!(l <= h)) throw std::invalid_argument("interval: lo > hi");
    }

    static interval empty() {
        interval iv;
        iv.empty_flag = true;
        iv.lo = std::numeric_limits<double>::quiet_NaN();
        iv.hi = std::numeric_limits<double>::quiet_NaN();
        return iv;
    }

    bool is_empty() const { return empty_flag; }
    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return !empty_flag && lo <= v && v <= hi; }
    bool contains_zero() const { return contains(0.0); }
};

namespace detail {
inline double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
inline double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }
}  // namespace detail

inline interval iv_add(const interval& a, const interval& b) {
    if (a.is_empty() || b.is_empty()) return interval::empty();
    return interval(detail::down(a.lo + b.lo), detail::up(a.hi + b.hi));
}

inline interval iv_sub(const interval& a, const interval& b) {
    if (a.is_empty() || b.is_empty()) return interval::empty();
    return interval(detail::down(a.lo - b.hi), detail::up(a.hi - b.lo));
}

inline interval iv_neg(const interval& a) {
    if (a.is_empty()) return interval::empty();
    return interval(-a.hi, -a.lo);
}

inline interval iv_mul(const interval& a, const interval& b) {
    if (a.is_empty() || b.is_empty()) return interval::empty();
    const double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    const double lo = std::min(std::min(p[0], p[1]), std::min(p[2], p[3]));
    const double hi = std::max(std::max(p[0], p[1]), std::max(p[2], p[3]));
    return interval(detail::down(lo), detail::up(hi));
}

inline interval iv_div(const interval& a, const interval& b) {
    if (a.is_empty() || b.is_empty()) return interval::empty();
    if (b.contains_zero()) throw std::domain_error("iv_div: denominator contains zero");
    const double p[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    const double lo = std::min(std::min(p[0], p[1]), std::min(p[2], p[3]));
    const double hi = std::max(std::max(p[0], p[1]), std::max(p[2], p[3]));
    return interval(detail::down(lo), detail::up(hi));
}

inline interval operator+(const interval& a, const interval& b) { return iv_add(a, b); }
inline interval operator-(const interval& a, const interval& b) { return iv_sub(a, b); }
inline interval operator-(const interval& a) { return iv_neg(a); }
inline interval operator*(const interval& a, const interval& b) { return iv_mul(a, b); }
inline interval operator/(const interval& a, const interval& b) { return iv_div(a, b); }

inline interval iv_pow(const interval& a, int e) {
    if (a.is_empty()) return interval::empty();
    if (e == 0) return interval(1.0);
    if (e < 0) return iv_div(interval(1.0), iv_pow(a, -e));
    if (e % 2 == 0 && a.contains_zero()) {
        // even power over a zero-straddling interval attains minimum 0
        interval m = iv_mul(a, a);
        interval r = m;
        for (int i = 2; i < e; i += 2) r = iv_mul(r, m);
        if (e % 2 == 1) r = iv_mul(r, a);
        return interval(0.0, std::max(r.hi, 0.0));
    }
    interval r = a;
    for (int i = 1; i < e; ++i) r = iv_mul(r, a);
    return r;
}

inline interval iv_hull(const interval& a, const interval& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

inline interval iv_from_rational(const rational& q) {
    return interval(to_double_down(q), to_double_up(q));
}

inline bool iv_subset(const interval& inner, const interval& outer) {
    if (inner.is_empty()) return true;
    if (outer.is_empty()) return false;
    return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

// Certified strict comparison: every member of a is below every member of b.
inline bool iv_certainly_less(const interval& a, const interval& b) {
    return !a.is_empty() && !b.is_empty() && a.hi < b.lo;
}

}  // namespace trigcert
