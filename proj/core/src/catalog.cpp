#include "trigcert/catalog.hpp"

#include <cctype>

#include "trigcert/approx.hpp"

namespace trigcert {

namespace {

pi_expr half_pi_expr() { return pi_expr(rational(1) / 2, 1); }

// pi^2 - 4x^2
pi_poly even_parabola() {
    return pi_poly({pi_expr(rational(1), 2), pi_expr(), pi_expr(rational(-4))});
}

// pi^4 - 16x^4
pi_poly even_quartic() {
    return pi_poly({pi_expr(rational(1), 4), pi_expr(), pi_expr(), pi_expr(), pi_expr(rational(-16))});
}

bound_poly sinc_bound_on_half_pi(std::string name, bound_side side, pi_poly p) {
    bound_poly b;
    b.name = std::move(name);
    b.side = side;
    b.var = bound_var::x;
    b.domain_lo = pi_expr();
    b.domain_hi = half_pi_expr();
    b.poly = std::move(p);
    return b;
}

bound_poly t_bound_on_half_pi(std::string name, bound_side side, pi_poly p) {
    bound_poly b = sinc_bound_on_half_pi(std::move(name), side, std::move(p));
    b.var = bound_var::t;
    return b;
}

std::optional<bound_poly> fixed_bound(const std::string& name) {
    const pi_expr two_over_pi(rational(2), -1);
    if (name == "S1L" || name == "S1U") {
        pi_poly p = pi_poly(two_over_pi) + pi_expr(rational(1), -3) * even_parabola() +
                    pi_poly(pi_expr(1) - pi_expr(rational(3), -1)) +
                    pi_poly::monomial(pi_expr(rational(4), -3) - pi_expr(rational(1) / 6), 2);
        if (name == "S1U") {
            p += pi_poly::monomial(pi_expr(rational(1) / 120), 4);
            return sinc_bound_on_half_pi("S1U", bound_side::upper, std::move(p));
        }
        return sinc_bound_on_half_pi("S1L", bound_side::lower, std::move(p));
    }
    if (name == "Q4" || name == "R4") {
        const pi_poly tail = pi_poly(pi_expr(1) - pi_expr(rational(5) / 2, -1)) +
                             pi_poly::monomial(pi_expr(rational(-1) / 6), 2);
        if (name == "Q4") {
            pi_poly p = pi_poly(two_over_pi) + pi_expr(rational(1) / 2, -5) * even_quartic() + tail;
            return sinc_bound_on_half_pi("Q4", bound_side::lower, std::move(p));
        }
        pi_poly p = pi_poly(two_over_pi) +
                    (pi_expr(rational(1), -4) - pi_expr(rational(2), -5)) * even_quartic() + tail +
                    pi_poly::monomial(pi_expr(rational(8), -5) + pi_expr(rational(1) / 120), 4);
        return sinc_bound_on_half_pi("R4", bound_side::upper, std::move(p));
    }
    if (name == "Q1") {
        pi_poly p(std::vector<pi_expr>{two_over_pi, pi_expr(rational(-1) / 2)});
        return t_bound_on_half_pi("Q1", bound_side::lower, std::move(p));
    }
    if (name == "R1") {
        pi_poly p(std::vector<pi_expr>{two_over_pi, pi_expr(rational(-1) / 3)});
        return t_bound_on_half_pi("R1", bound_side::upper, std::move(p));
    }
    if (name == "J2L") {
        return sinc_bound_on_half_pi(
            "J2L", bound_side::lower,
            pi_poly(two_over_pi) + pi_expr(rational(1), -3) * even_parabola());
    }
    if (name == "J2U") {
        return sinc_bound_on_half_pi(
            "J2U", bound_side::upper,
            pi_poly(two_over_pi) +
                (pi_expr(rational(1), -2) - pi_expr(rational(2), -3)) * even_parabola());
    }
    if (name == "J3L") {
        return sinc_bound_on_half_pi(
            "J3L", bound_side::lower,
            pi_poly(two_over_pi) + pi_expr(rational(1) / 2, -5) * even_quartic());
    }
    if (name == "J3U") {
        return sinc_bound_on_half_pi(
            "J3U", bound_side::upper,
            pi_poly(two_over_pi) +
                (pi_expr(rational(1), -4) - pi_expr(rational(2), -5)) * even_quartic());
    }
    if (name == "S5A") {
        bound_poly b = taylor_bound(series_id::psi_product, 2);
        b.name = "S5A";
        return b;
    }
    if (name == "S5B") {
        bound_poly b = taylor_bound(series_id::psi_product, 3);
        b.name = "S5B";
        return b;
    }
    if (name == "U3") {
        bound_poly b = taylor_bound(series_id::becker_stark_C, 4);
        b.name = "U3";
        return b;
    }
    if (name == "T6LOW") {
        bound_poly b = becker_stark_lower(2, rational(1371) / 1000);
        b.name = "T6LOW";
        b.domain_hi = pi_expr(rational(1371) / 1000);
        return b;
    }
    return std::nullopt;
}

bool parse_uint(const std::string& s, size_t& pos, unsigned& out) {
    size_t start = pos;
    unsigned v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + static_cast<unsigned>(s[pos] - '0');
        ++pos;
    }
    if (pos == start) return false;
    out = v;
    return true;
}

std::optional<bound_poly> patterned_bound(const std::string& name) {
    if (name.size() >= 4 && name[0] == 'T' && std::isdigit(static_cast<unsigned char>(name[1]))) {
        size_t pos = 1;
        unsigned n = 0;
        if (!parse_uint(name, pos, n)) return std::nullopt;
        if (pos + 2 >= name.size()) return std::nullopt;
        const char side = name[pos];
        if (side != 'L' && side != 'U') return std::nullopt;
        if (name[pos + 1] != '(' || name.back() != ')') return std::nullopt;
        const std::string series_name = name.substr(pos + 2, name.size() - pos - 3);
        series_id id;
        if (series_name == "f") {
            id = series_id::steckin_alpha;
        } else if (series_name == "phi") {
            id = series_id::becker_stark_C;
        } else if (series_name == "psi") {
            id = series_id::psi_product;
        } else if (series_name == "psic") {
            id = series_id::psi_conjecture;
        } else {
            auto parsed = parse_series_id(series_name);
            if (!parsed) return std::nullopt;
            id = *parsed;
        }
        bound_poly b = taylor_bound(id, n);
        const char expected = (b.side == bound_side::lower) ? 'L' : 'U';
        if (side != expected) return std::nullopt;
        return b;
    }
    if (name.size() >= 8 && name[0] == 'W') {
        size_t pos = 1;
        unsigned n = 0;
        if (!parse_uint(name, pos, n)) return std::nullopt;
        if (name.substr(pos) != "L(cot)" || n % 2 == 0) return std::nullopt;
        return two_point_cot_lower(n);
    }
    if (name.size() >= 2 && name[0] == 'F' && std::isdigit(static_cast<unsigned char>(name[1]))) {
        size_t pos = 1;
        unsigned n = 0;
        if (!parse_uint(name, pos, n) || pos != name.size()) return std::nullopt;
        return steckin_upper(n);
    }
    if (name.size() >= 3 && name[0] == 'S' && name[1] == 'F') {
        size_t pos = 2;
        unsigned n = 0;
        if (!parse_uint(name, pos, n) || pos != name.size() || n % 2 == 0) return std::nullopt;
        return steckin_lower(n);
    }
    return std::nullopt;
}

}  // namespace

std::optional<bound_poly> lookup_bound(const std::string& name) {
    if (auto b = fixed_bound(name)) return b;
    return patterned_bound(name);
}

std::vector<std::string> catalog_names() {
    return {"S1L", "S1U", "Q1", "R1", "Q4",  "R4",  "J2L", "J2U", "J3L",
            "J3U", "S5A", "S5B", "U3", "T6LOW", "F1", "F3", "SF1", "SF3"};
}

}  // namespace trigcert
