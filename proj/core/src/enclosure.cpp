#include "trigcert/enclosure.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "trigcert/pi.hpp"
#include "trigcert/series.hpp"

namespace trigcert {

namespace {

constexpr unsigned series_terms = 16;
constexpr unsigned steckin_terms = 28;

// Alternating-series hull: S_K and S_{K+1} bracket the true value pointwise
// once the term magnitudes decrease from the cut onward, which holds for every
// input these helpers accept.
interval sin_series_hull(const interval& v) {
    const interval v2 = v * v;
    interval term = v;
    interval sum(0.0);
    for (unsigned k = 0; k < series_terms; ++k) {
        sum = (k % 2 == 0) ? sum + term : sum - term;
        const double div = static_cast<double>((2 * k + 2) * (2 * k + 3));
        term = term * v2 / interval(div);
    }
    const interval next = (series_terms % 2 == 0) ? sum + term : sum - term;
    return iv_hull(sum, next);
}

interval cos_series_hull(const interval& v) {
    const interval v2 = v * v;
    interval term(1.0);
    interval sum(0.0);
    for (unsigned k = 0; k < series_terms; ++k) {
        sum = (k % 2 == 0) ? sum + term : sum - term;
        const double div = static_cast<double>((2 * k + 1) * (2 * k + 2));
        term = term * v2 / interval(div);
    }
    const interval next = (series_terms % 2 == 0) ? sum + term : sum - term;
    return iv_hull(sum, next);
}

interval sinc_series_hull(const interval& v) {
    const interval v2 = v * v;
    interval term(1.0);
    interval sum(0.0);
    for (unsigned k = 0; k < series_terms; ++k) {
        sum = (k % 2 == 0) ? sum + term : sum - term;
        const double div = static_cast<double>((2 * k + 2) * (2 * k + 3));
        term = term * v2 / interval(div);
    }
    const interval next = (series_terms % 2 == 0) ? sum + term : sum - term;
    return iv_hull(sum, next);
}

void require_range(const interval& v, double lo, double hi, const char* what) {
    if (v.lo < lo || v.hi > hi) throw std::domain_error(std::string(what) + ": input outside valid range");
}

const interval& cot_coeff_interval(unsigned k) {
    static std::vector<interval> cache{interval(0.0)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= k) {
        cache.push_back(iv_from_rational(cot_coeff(static_cast<unsigned>(cache.size()))));
    }
    return cache[k];
}

interval two_over_pi_interval() {
    static const interval v = interval(2.0) / pi_interval();
    return v;
}

interval enclose_steckin_g(const interval& t) {
    require_range(t, 0.0, 1.5708, "steckin_g");
    const interval t2 = t * t;
    interval acc = two_over_pi_interval();
    interval tp = t;
    for (unsigned k = 1; k <= steckin_terms; ++k) {
        acc = acc - cot_coeff_interval(k) * tp;
        tp = tp * t2;
    }
    // tail of sum_{k>K} c_k t^(2k-1) with c_k < 4 / pi^(2k)
    const interval u(t.hi);
    const interval pi_iv = pi_interval();
    const interval r = iv_pow(u / pi_iv, 2);
    const interval tail = interval(4.0) * iv_pow(u, 2 * static_cast<int>(steckin_terms) + 1) /
                          iv_pow(pi_iv, 2 * static_cast<int>(steckin_terms) + 2) /
                          (interval(1.0) - r);
    return acc - interval(0.0, tail.hi);
}

interval enclose_steckin_f(const interval& x) {
    require_range(x, 0.0, 1.5708, "steckin_f");
    interval t = half_pi_interval() - x;
    if (t.lo < 0.0) t.lo = 0.0;
    return enclose_steckin_g(t);
}

interval psi_product_form(const interval& t) {
    const interval pi_iv = pi_interval();
    const interval num = interval(8.0) * (pi_iv - t) * enclose_cos(t);
    const interval den = (pi_iv - interval(2.0) * t) * enclose_sinc(t);
    return num / den;
}

interval phi_ratio_form(const interval& x) {
    const interval pi_iv = pi_interval();
    const interval num = (iv_pow(pi_iv, 2) - interval(4.0) * iv_pow(x, 2)) * enclose_sinc(x);
    return num / enclose_cos(x);
}

interval enclose_psi(const interval& t) {
    require_range(t, 0.0, 1.5708, "psi");
    if (t.hi <= 0.8) return psi_product_form(t);
    if (t.lo >= 0.7) {
        interval s = half_pi_interval() - t;
        if (s.lo < 0.0) s.lo = 0.0;
        return phi_ratio_form(s);
    }
    return iv_hull(enclose_psi(interval(t.lo, 0.75)), enclose_psi(interval(0.75, t.hi)));
}

interval enclose_phi(const interval& x) {
    require_range(x, 0.0, 1.5708, "phi");
    if (x.hi <= 0.8) return phi_ratio_form(x);
    if (x.lo >= 0.7) {
        interval s = half_pi_interval() - x;
        if (s.lo < 0.0) s.lo = 0.0;
        return psi_product_form(s);
    }
    return iv_hull(enclose_phi(interval(x.lo, 0.75)), enclose_phi(interval(0.75, x.hi)));
}

}  // namespace

std::optional<function_id> parse_function_id(const std::string& name) {
    if (name == "sinc") return function_id::sinc;
    if (name == "tan") return function_id::tan;
    if (name == "cot") return function_id::cot;
    if (name == "f" || name == "steckin_f") return function_id::steckin_f;
    if (name == "g" || name == "steckin_g") return function_id::steckin_g;
    if (name == "psi") return function_id::psi;
    if (name == "phi") return function_id::phi;
    return std::nullopt;
}

std::string function_id_name(function_id fn) {
    switch (fn) {
        case function_id::sinc: return "sinc";
        case function_id::tan: return "tan";
        case function_id::cot: return "cot";
        case function_id::steckin_f: return "f";
        case function_id::steckin_g: return "g";
        case function_id::psi: return "psi";
        case function_id::phi: return "phi";
    }
    return "?";
}

interval enclose_sin(const interval& v) {
    require_range(v, 0.0, 1.6, "sin");
    const interval a = sin_series_hull(interval(v.lo));
    const interval b = sin_series_hull(interval(v.hi));
    const double lo = std::max(0.0, std::min(a.lo, b.lo));
    const interval& hp = half_pi_interval();
    const bool contains_half_pi = v.lo <= hp.hi && v.hi >= hp.lo;
    const double hi = contains_half_pi ? 1.0 : std::min(1.0, std::max(a.hi, b.hi));
    return interval(lo, hi);
}

interval enclose_cos(const interval& v) {
    require_range(v, 0.0, 1.6, "cos");
    const interval a = cos_series_hull(interval(v.hi));
    const interval b = cos_series_hull(interval(v.lo));
    return interval(a.lo, std::min(1.0, b.hi));
}

interval enclose_sinc(const interval& v) {
    require_range(v, 0.0, 3.461, "sinc");
    const interval a = sinc_series_hull(interval(v.hi));
    const interval b = sinc_series_hull(interval(v.lo));
    return interval(a.lo, std::min(1.0, b.hi));
}

interval enclose(function_id fn, const interval& v) {
    switch (fn) {
        case function_id::sinc:
            return enclose_sinc(v);
        case function_id::tan: {
            require_range(v, 0.0, half_pi_interval().lo, "tan");
            return enclose_sin(v) / enclose_cos(v);
        }
        case function_id::cot: {
            if (v.lo <= 0.0) throw std::domain_error("cot: input outside valid range");
            require_range(v, 0.0, 1.6, "cot");
            return enclose_cos(v) / enclose_sin(v);
        }
        case function_id::steckin_f:
            return enclose_steckin_f(v);
        case function_id::steckin_g:
            return enclose_steckin_g(v);
        case function_id::psi:
            return enclose_psi(v);
        case function_id::phi:
            return enclose_phi(v);
    }
    throw std::logic_error("unknown function id");
}

namespace {

rational eps_for_bits(unsigned bits) { return rat_pow(rational(1) / 2, static_cast<int>(bits) + 2); }

// Alternating series evaluation with dyadic rounding after every operation,
// so operand sizes stay near the working precision instead of compounding.
// start_degree 1 gives the sine numerators, 0 the cosine family; divisor_base
// selects the factorial stride. The tail bound uses the first omitted term,
// valid once consecutive terms shrink, which holds from k = 1 on for v <= 8/5.
rational_interval rat_alternating_point(const rational& v, unsigned start_degree,
                                        bool shift_divisor, const rational& eps, unsigned bits) {
    const unsigned work = bits + 40;
    const rational_interval v2 = ri_round_out(rational_interval(v * v), work);
    rational_interval term(start_degree == 1 ? v : rational(1));
    rational_interval sum(rational(0));
    for (unsigned k = 0;; ++k) {
        sum = ri_round_out((k % 2 == 0) ? sum + term : sum - term, work);
        const unsigned long d1 = 2 * k + (shift_divisor ? 1 : 2);
        const rational divisor(d1 * (d1 + 1));
        const rational_interval next =
            ri_round_out(term * v2 / rational_interval(divisor), work);
        if (k >= 1 && next.hi < eps) {
            return rational_interval(sum.lo - next.hi, sum.hi + next.hi);
        }
        term = next;
        if (k > 5000) throw std::logic_error("series failed to converge");
    }
}

rational_interval rat_sin_point(const rational& v, const rational& eps, unsigned bits) {
    return rat_alternating_point(v, 1, false, eps, bits);
}

rational_interval rat_cos_point(const rational& v, const rational& eps, unsigned bits) {
    return rat_alternating_point(v, 0, true, eps, bits);
}

rational_interval rat_sinc_point(const rational& v, const rational& eps, unsigned bits) {
    return rat_alternating_point(v, 0, false, eps, bits);
}

void rat_require_range(const rational_interval& v, const rational& lo, const rational& hi, const char* what) {
    if (v.lo < lo || v.hi > hi) throw std::domain_error(std::string(what) + ": input outside valid range");
}

rational_interval rat_half_pi(unsigned bits) {
    const rational_interval p = pi_enclosure_rational(bits);
    return rational_interval(p.lo / 2, p.hi / 2);
}

rational_interval rat_steckin_g(const rational_interval& t, unsigned bits) {
    const rational_interval pi_iv = pi_enclosure_rational(bits + 8);
    rat_require_range(t, rational(0), pi_iv.hi / 2, "steckin_g");
    if (t.lo >= rational(7) / 10) {
        // away from the removable singularity the defining quotient is tight
        const rational_interval cot = rat_cos(t, bits) / rat_sin(t, bits);
        return cot - rational_interval(rational(1)) / t + rational_interval(rational(2)) / pi_iv;
    }
    if (t.hi > rational(8) / 10) {
        const rational mid = rational(3) / 4;
        return ri_hull(rat_steckin_g(rational_interval(t.lo, mid), bits),
                       rat_steckin_g(rational_interval(mid, t.hi), bits));
    }
    const rational eps = eps_for_bits(bits);
    const unsigned work = bits + 40;
    // choose the cut so the geometric tail majorant drops below eps
    const rational ratio = (t.hi * t.hi) / (pi_iv.lo * pi_iv.lo);
    unsigned cut = 1;
    rational bound = 4 * t.hi * t.hi * t.hi / rat_pow(pi_iv.lo, 4) / (1 - ratio);
    while (bound >= eps && cut < 800) {
        bound *= ratio;
        ++cut;
    }
    rational_interval acc = rational_interval(rational(2)) / pi_iv;
    rational_interval tp = ri_round_out(t, work);
    const rational_interval t2 = ri_round_out(t * t, work);
    for (unsigned k = 1; k <= cut; ++k) {
        acc = ri_round_out(acc - rational_interval(cot_coeff(k)) * tp, work);
        tp = ri_round_out(tp * t2, work);
    }
    const rational tail = 4 * rat_pow(t.hi, 2 * static_cast<int>(cut) + 1) /
                          rat_pow(pi_iv.lo, 2 * static_cast<int>(cut) + 2) / (1 - ratio);
    return acc - rational_interval(rational(0), tail);
}

rational_interval rat_psi_product_form(const rational_interval& t, unsigned bits) {
    const rational_interval pi_iv = pi_enclosure_rational(bits + 8);
    const rational_interval num = rational_interval(rational(8)) * (pi_iv - t) * rat_cos(t, bits);
    const rational_interval den = (pi_iv - rational_interval(rational(2)) * t) * rat_sinc(t, bits);
    return num / den;
}

rational_interval rat_phi_ratio_form(const rational_interval& x, unsigned bits) {
    const rational_interval pi_iv = pi_enclosure_rational(bits + 8);
    const rational_interval num =
        (pi_iv * pi_iv - rational_interval(rational(4)) * x * x) * rat_sinc(x, bits);
    return num / rat_cos(x, bits);
}

rational_interval rat_psi(const rational_interval& t, unsigned bits) {
    rat_require_range(t, rational(0), rational(15708) / 10000, "psi");
    if (t.hi <= rational(8) / 10) return rat_psi_product_form(t, bits);
    if (t.lo >= rational(7) / 10) {
        rational_interval s = rat_half_pi(bits + 8) - t;
        if (s.lo < 0) s.lo = 0;
        return rat_phi_ratio_form(s, bits);
    }
    const rational mid = rational(3) / 4;
    return ri_hull(rat_psi(rational_interval(t.lo, mid), bits), rat_psi(rational_interval(mid, t.hi), bits));
}

rational_interval rat_phi(const rational_interval& x, unsigned bits) {
    rat_require_range(x, rational(0), rational(15708) / 10000, "phi");
    if (x.hi <= rational(8) / 10) return rat_phi_ratio_form(x, bits);
    if (x.lo >= rational(7) / 10) {
        rational_interval s = rat_half_pi(bits + 8) - x;
        if (s.lo < 0) s.lo = 0;
        return rat_psi_product_form(s, bits);
    }
    const rational mid = rational(3) / 4;
    return ri_hull(rat_phi(rational_interval(x.lo, mid), bits), rat_phi(rational_interval(mid, x.hi), bits));
}

}  // namespace

rational_interval rat_sin(const rational_interval& v, unsigned bits) {
    rat_require_range(v, rational(0), rational(8) / 5, "sin");
    const rational eps = eps_for_bits(bits);
    const rational_interval a = rat_sin_point(v.lo, eps, bits);
    const rational_interval b = rat_sin_point(v.hi, eps, bits);
    rational lo = std::min(a.lo, b.lo);
    if (lo < 0) lo = 0;
    const rational_interval hp = rat_half_pi(bits + 8);
    const bool contains_half_pi = v.lo <= hp.hi && v.hi >= hp.lo;
    rational hi = contains_half_pi ? rational(1) : std::min(rational(1), std::max(a.hi, b.hi));
    return rational_interval(std::move(lo), std::move(hi));
}

rational_interval rat_cos(const rational_interval& v, unsigned bits) {
    rat_require_range(v, rational(0), rational(8) / 5, "cos");
    const rational eps = eps_for_bits(bits);
    const rational_interval a = rat_cos_point(v.hi, eps, bits);
    const rational_interval b = rat_cos_point(v.lo, eps, bits);
    return rational_interval(a.lo, std::min(rational(1), b.hi));
}

rational_interval rat_sinc(const rational_interval& v, unsigned bits) {
    rat_require_range(v, rational(0), rational(3461) / 1000, "sinc");
    const rational eps = eps_for_bits(bits);
    const rational_interval a = rat_sinc_point(v.hi, eps, bits);
    const rational_interval b = rat_sinc_point(v.lo, eps, bits);
    return rational_interval(a.lo, std::min(rational(1), b.hi));
}

rational_interval rat_enclose(function_id fn, const rational_interval& v, unsigned bits) {
    switch (fn) {
        case function_id::sinc:
            return rat_sinc(v, bits);
        case function_id::tan: {
            const rational_interval pi_iv = pi_enclosure_rational(bits + 8);
            if (v.hi >= pi_iv.lo / 2) throw std::domain_error("tan: input outside valid range");
            rat_require_range(v, rational(0), rational(8) / 5, "tan");
            return rat_sin(v, bits) / rat_cos(v, bits);
        }
        case function_id::cot: {
            if (v.lo <= 0) throw std::domain_error("cot: input outside valid range");
            rat_require_range(v, rational(0), rational(8) / 5, "cot");
            return rat_cos(v, bits) / rat_sin(v, bits);
        }
        case function_id::steckin_f: {
            rational_interval t = rat_half_pi(bits + 8) - v;
            if (t.lo < 0) t.lo = 0;
            return rat_steckin_g(t, bits);
        }
        case function_id::steckin_g:
            return rat_steckin_g(v, bits);
        case function_id::psi:
            return rat_psi(v, bits);
        case function_id::phi:
            return rat_phi(v, bits);
    }
    throw std::logic_error("unknown function id");
}

}  // namespace trigcert
