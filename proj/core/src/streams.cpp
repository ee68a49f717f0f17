#include "trigcert/streams.hpp"

#include "trigcert/series.hpp"

namespace trigcert {

namespace {

const pi_expr& half_pi_point() {
    static const pi_expr hp(rational(1, 2), 1);
    return hp;
}

pi_expr sinc_at_zero(int k) {
    if (k < 0 || k % 2 != 0) return pi_expr();
    return pi_expr(sinc_coeff(static_cast<unsigned>(k / 2)));
}

// sinc(pi/2 - u) = cos(u) / (pi/2 - u) = (2/pi) cos(u) sum_j (2u/pi)^j, so the
// u^n coefficient is sum_{2i <= n} (-1)^i / (2i)! * 2^(n-2i+1) * pi^-(n-2i+1).
pi_expr sinc_at_half_pi(int n) {
    if (n < 0) return pi_expr();
    pi_expr acc;
    for (int i = 0; 2 * i <= n; ++i) {
        const int e = n - 2 * i + 1;
        rational c = rational(int_pow(2, static_cast<unsigned>(e))) /
                     factorial(static_cast<unsigned>(2 * i));
        if (i % 2 != 0) c = -c;
        acc += pi_expr(c, -e);
    }
    return acc;
}

pi_expr tan_at_zero(int k) {
    if (k < 1 || k % 2 != 1) return pi_expr();
    return pi_expr(tan_coeff(static_cast<unsigned>((k + 1) / 2)));
}

// Regular part of cot at 0; the 1/u term is reported through min_index == -1.
pi_expr cot_regular(int k) {
    if (k < 1 || k % 2 != 1) return pi_expr();
    return pi_expr(-cot_coeff(static_cast<unsigned>((k + 1) / 2)));
}

pi_expr cot_at_zero(int k) {
    if (k == -1) return pi_expr(1);
    return cot_regular(k);
}

// g(u) = cot u - 1/u + 2/pi: the singular parts cancel exactly.
pi_expr g_at_zero(int k) {
    if (k == 0) return pi_expr(rational(2), -1);
    return cot_regular(k);
}

pi_expr f_at_zero(int k) {
    if (k < 1) return pi_expr();
    return steckin_alpha(static_cast<unsigned>(k));
}

pi_expr phi_at_zero(int k) {
    if (k < 0 || k % 2 != 0) return pi_expr();
    return becker_stark_C(static_cast<unsigned>(k / 2 + 1));
}

pi_expr psi_at_zero(int k) {
    if (k < 0) return pi_expr();
    static const coeff_stream stream(series_id::psi_product);
    return stream.coeff(static_cast<unsigned>(k));
}

endpoint_stream make(int min_index, pi_expr (*coeff)(int), long long a, const rational& r) {
    endpoint_stream s;
    s.min_index = min_index;
    s.coeff = coeff;
    s.majorant_A = a;
    s.majorant_r = r;
    return s;
}

}  // namespace

std::optional<endpoint_stream> local_expansion(function_id fn, const pi_expr& point,
                                               int direction) {
    const bool at_zero = point.is_zero() && direction == 1;
    const bool at_half_pi = point == half_pi_point() && direction == -1;
    const rational r_half(1, 2);
    const rational r_two_over_pi(6367, 10000);   // > 2/pi
    const rational r_one_over_pi(3184, 10000);   // > 1/pi

    switch (fn) {
        case function_id::sinc:
            if (at_zero) return make(0, &sinc_at_zero, 1, r_half);
            if (at_half_pi) return make(0, &sinc_at_half_pi, 2, r_two_over_pi);
            return std::nullopt;
        case function_id::tan:
            if (at_zero) return make(1, &tan_at_zero, 4, r_two_over_pi);
            return std::nullopt;
        case function_id::cot:
            if (at_zero) return make(-1, &cot_at_zero, 2, r_one_over_pi);
            return std::nullopt;
        case function_id::steckin_f:
            if (at_zero) return make(1, &f_at_zero, 4, r_two_over_pi);
            if (at_half_pi) return make(0, &g_at_zero, 2, r_one_over_pi);
            return std::nullopt;
        case function_id::steckin_g:
            if (at_zero) return make(0, &g_at_zero, 2, r_one_over_pi);
            if (at_half_pi) return make(1, &f_at_zero, 4, r_two_over_pi);
            return std::nullopt;
        case function_id::psi:
            if (at_zero) return make(0, &psi_at_zero, 256, r_two_over_pi);
            if (at_half_pi) return make(0, &phi_at_zero, 64, r_two_over_pi);
            return std::nullopt;
        case function_id::phi:
            if (at_zero) return make(0, &phi_at_zero, 64, r_two_over_pi);
            if (at_half_pi) return make(0, &psi_at_zero, 256, r_two_over_pi);
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace trigcert
