#include "trigcert/approx.hpp"

#include <stdexcept>

#include "trigcert/enclosure.hpp"
#include "trigcert/pi.hpp"

namespace trigcert {

namespace {

pi_expr half_pi_expr() { return pi_expr(rational(1) / 2, 1); }

pi_expr series_coeff(series_id id, unsigned k) { return coeff_stream(id).coeff(k); }

std::string side_suffix(bound_side s) { return s == bound_side::lower ? "L" : "U"; }

std::string series_display_name(series_id id) {
    switch (id) {
        case series_id::steckin_alpha: return "f";
        case series_id::becker_stark_C: return "phi";
        case series_id::psi_product: return "psi";
        case series_id::psi_conjecture: return "psic";
        default: return series_id_name(id);
    }
}

}  // namespace

pi_poly series_partial(series_id id, unsigned n) {
    std::vector<pi_expr> cs(n + 1);
    for (unsigned k = series_min_index(id);; ++k) {
        const int p = series_power(id, k);
        if (p < 0) continue;
        if (static_cast<unsigned>(p) > n) break;
        pi_expr c = series_coeff(id, k);
        if (id == series_id::cot) c = -c;
        cs[static_cast<size_t>(p)] += c;
    }
    return pi_poly(std::move(cs));
}

bound_poly taylor_bound(series_id id, unsigned n) {
    bound_poly b;
    b.poly = series_partial(id, n);
    b.var = bound_var::x;
    b.domain_lo = pi_expr();
    switch (id) {
        case series_id::sinc:
            b.side = ((n / 2) % 2 == 1) ? bound_side::lower : bound_side::upper;
            b.domain_hi = pi_expr(rational(173) / 50);
            break;
        case series_id::tan:
            b.side = bound_side::lower;
            b.domain_hi = half_pi_expr();
            break;
        case series_id::cot:
            b.side = bound_side::upper;
            b.var = bound_var::t;
            b.domain_hi = pi_expr::pi();
            b.principal_coeff = pi_expr(1);
            break;
        case series_id::steckin_alpha:
            b.side = (n % 2 == 0) ? bound_side::lower : bound_side::upper;
            b.domain_hi = pi_expr(1);
            break;
        case series_id::becker_stark_C:
            b.side = bound_side::upper;
            b.domain_hi = half_pi_expr();
            break;
        case series_id::psi_product:
        case series_id::psi_conjecture:
            b.side = (n % 2 == 0) ? bound_side::lower : bound_side::upper;
            b.var = bound_var::t;
            b.domain_hi = half_pi_expr();
            break;
    }
    b.name = "T" + std::to_string(n) + side_suffix(b.side) + "(" + series_display_name(id) + ")";
    return b;
}

bound_poly two_point_cot_lower(unsigned n) {
    if (n % 2 == 0) throw std::invalid_argument("two_point_cot_lower: order must be odd");
    bound_poly b;
    b.name = "W" + std::to_string(n) + "L(cot)";
    b.side = bound_side::lower;
    b.var = bound_var::t;
    b.domain_lo = pi_expr();
    b.domain_hi = half_pi_expr();
    b.principal_coeff = pi_expr(1);
    pi_poly partial = (n >= 1) ? series_partial(series_id::cot, n - 1) : pi_poly();
    const pi_expr value_at_b = pi_expr(rational(2), -1) + partial.evaluate(half_pi_expr());
    const pi_expr kappa = pi_expr(rational(-int_pow(integer(2), n)), -static_cast<int>(n)) * value_at_b;
    b.poly = partial + pi_poly::monomial(kappa, n);
    return b;
}

bound_poly steckin_upper(unsigned n) {
    bound_poly b;
    b.name = "F" + std::to_string(n);
    b.side = bound_side::upper;
    b.var = bound_var::t;
    b.domain_lo = pi_expr();
    b.domain_hi = half_pi_expr();
    b.poly = series_partial(series_id::cot, n) + pi_poly(pi_expr(rational(2), -1));
    return b;
}

bound_poly steckin_lower(unsigned n) {
    const bound_poly wd = two_point_cot_lower(n);
    bound_poly b;
    b.name = "SF" + std::to_string(n);
    b.side = bound_side::lower;
    b.var = bound_var::t;
    b.domain_lo = pi_expr();
    b.domain_hi = half_pi_expr();
    b.poly = wd.poly + pi_poly(pi_expr(rational(2), -1));
    return b;
}

rational forced_ratio_top(unsigned m1, const rational& c, unsigned bits) {
    if (m1 < 2) throw std::invalid_argument("forced_ratio_top: need m1 >= 2");
    pi_poly head;
    for (unsigned k = 1; k < m1; ++k) {
        head += pi_poly::monomial(becker_stark_C(k), 2 * k - 2);
    }
    const pi_expr head_at_c = head.evaluate(pi_expr(c));
    const rational_interval pi_iv = pi_enclosure_rational(bits);
    const rational_interval head_iv = head_at_c.evaluate(pi_iv);
    const rational_interval phi_iv = rat_enclose(function_id::phi, rational_interval(c), bits);
    return (phi_iv.lo - head_iv.hi) / rat_pow(c, 2 * static_cast<int>(m1) - 2);
}

bound_poly becker_stark_lower(unsigned m1, const rational& c) {
    const rational margin = rational(1) / int_pow(integer(10), 8);
    const rational exact = forced_ratio_top(m1, c, 256) - margin;
    const rational gamma = rational_from_double(to_double_down(exact));
    bound_poly b;
    b.name = "BSL" + std::to_string(m1);
    b.side = bound_side::lower;
    b.var = bound_var::x;
    b.domain_lo = pi_expr();
    b.domain_hi = half_pi_expr();
    for (unsigned k = 1; k < m1; ++k) {
        b.poly += pi_poly::monomial(becker_stark_C(k), 2 * k - 2);
    }
    b.poly += pi_poly::monomial(pi_expr(gamma), 2 * m1 - 2);
    return b;
}

}  // namespace trigcert
