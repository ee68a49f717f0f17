#include "trigcert/mixed_trig.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "trigcert/enclosure.hpp"
#include "trigcert/rational.hpp"

namespace trigcert {

void mixed_trig_expr::add_term(unsigned p, unsigned q, unsigned r, const pi_expr& c) {
    if (c.is_zero()) return;
    const key k{p, q, r};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void mixed_trig_expr::add_poly_times(const pi_poly& poly, unsigned p_shift, unsigned q, unsigned r,
                                     const pi_expr& scale) {
    for (int j = 0; j <= poly.degree(); ++j) {
        add_term(static_cast<unsigned>(j) + p_shift, q, r, scale * poly.coeff(static_cast<unsigned>(j)));
    }
}

mixed_trig_expr mixed_trig_expr::flipped_about_half_pi() const {
    mixed_trig_expr out;
    for (const auto& [k, c] : terms_) {
        const auto [p, q, r] = k;
        for (unsigned j = 0; j <= p; ++j) {
            // (pi/2 - s)^p contributes C(p, j) (pi/2)^(p-j) (-s)^j
            pi_expr factor(binomial(p, j) * rat_pow(rational(1, 2), static_cast<int>(p - j)),
                           static_cast<int>(p - j));
            if (j % 2 == 1) factor = -factor;
            out.add_term(j, r, q, c * factor);
        }
    }
    return out;
}

interval mixed_trig_expr::evaluate_d(const interval& v) const {
    const interval s = enclose_sin(v);
    const interval c = enclose_cos(v);
    interval acc(0.0);
    for (const auto& [k, coef] : terms_) {
        const auto [p, q, r] = k;
        interval t = coef.evaluate_d();
        for (unsigned i = 0; i < p; ++i) t = iv_mul(t, v);
        for (unsigned i = 0; i < q; ++i) t = iv_mul(t, s);
        for (unsigned i = 0; i < r; ++i) t = iv_mul(t, c);
        acc = iv_add(acc, t);
    }
    return acc;
}

std::string mixed_trig_expr::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const auto [p, q, r] = k;
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        if (p == 1) out << "*" << var;
        if (p > 1) out << "*" << var << "^" << p;
        if (q == 1) out << "*sin(" << var << ")";
        if (q > 1) out << "*sin(" << var << ")^" << q;
        if (r == 1) out << "*cos(" << var << ")";
        if (r > 1) out << "*cos(" << var << ")^" << r;
    }
    return out.str();
}

namespace {

// Partial sums of the sine and cosine series. On (0, 4/5] consecutive terms
// shrink strictly, so truncating after a negative term gives a lower envelope
// and truncating after a positive term gives an upper envelope.
pi_poly sin_truncation(unsigned degree, bool lower) {
    const unsigned top = (degree - 1) / 2;
    unsigned last = top;
    if (lower != (last % 2 == 1)) last -= 1;
    std::vector<pi_expr> coeffs(2 * last + 2);
    for (unsigned i = 0; i <= last; ++i) {
        rational c = rational(1) / factorial(2 * i + 1);
        coeffs[2 * i + 1] = pi_expr(i % 2 == 0 ? c : -c);
    }
    return pi_poly(coeffs);
}

pi_poly cos_truncation(unsigned degree, bool lower) {
    const unsigned top = degree / 2;
    unsigned last = top;
    if (lower != (last % 2 == 1)) last -= 1;
    std::vector<pi_expr> coeffs(2 * last + 1);
    for (unsigned i = 0; i <= last; ++i) {
        rational c = rational(1) / factorial(2 * i);
        coeffs[2 * i] = pi_expr(i % 2 == 0 ? c : -c);
    }
    return pi_poly(coeffs);
}

// Tries to certify expr > 0 on (0, 4/5) by replacing sin and cos with
// polynomial envelopes of the requested degree. Failure to certify means
// nothing; the envelopes are lossy.
std::optional<bound_cert> try_zone(const mixed_trig_expr& expr, unsigned degree,
                                   const prove_options& opts) {
    const pi_expr lo{};
    const pi_expr hi(rational(4, 5));
    const pi_poly sin_lo = sin_truncation(degree, true);
    const pi_poly sin_hi = sin_truncation(degree, false);
    const pi_poly cos_lo = cos_truncation(degree, true);
    const pi_poly cos_hi = cos_truncation(degree, false);
    // powers of the envelopes bound powers of sin and cos only while the
    // lower envelopes stay positive on the zone
    if (prove_poly_positive(sin_lo, lo, hi, opts).status != claim_status::verified) {
        return std::nullopt;
    }
    if (prove_poly_positive(cos_lo, lo, hi, opts).status != claim_status::verified) {
        return std::nullopt;
    }
    pi_poly envelope;
    for (const auto& [k, c] : expr.terms()) {
        const auto [p, q, r] = k;
        const bool positive = c.sign() > 0;
        const pi_poly& sin_pick = positive ? sin_lo : sin_hi;
        const pi_poly& cos_pick = positive ? cos_lo : cos_hi;
        pi_poly prod(c);
        for (unsigned i = 0; i < q; ++i) prod = prod * sin_pick;
        for (unsigned i = 0; i < r; ++i) prod = prod * cos_pick;
        if (p > 0) prod = prod * pi_poly::monomial(pi_expr(1), p);
        envelope += prod;
    }
    bound_cert cert = prove_poly_positive(envelope, lo, hi, opts);
    if (cert.status != claim_status::verified) return std::nullopt;
    return cert;
}

}  // namespace

bound_cert prove_mixed_positive(const mixed_trig_expr& expr, const prove_options& opts) {
    bound_cert cert;
    if (expr.is_zero()) {
        cert.status = claim_status::refuted;
        cert.witness = witness_info{pi_expr(rational(1, 4), 1).to_string(),
                                    "expression is identically zero"};
        return cert;
    }

    // certified counterexample scan at fixed interior points
    std::vector<double> scan;
    for (int i = 1; i <= 34; ++i) scan.push_back(i / 22.0);
    scan.push_back(1.56);
    scan.push_back(1.5707);
    for (double x : scan) {
        const interval e = expr.evaluate_d(interval(x));
        if (e.hi < 0) {
            std::ostringstream os;
            os << rational_from_double(x);
            cert.status = claim_status::refuted;
            cert.witness =
                witness_info{os.str(), "expression enclosure is strictly negative at this point"};
            return cert;
        }
    }

    const mixed_trig_expr mirrored = expr.flipped_about_half_pi();
    std::optional<bound_cert> left, right;
    unsigned left_degree = 0, right_degree = 0;
    for (unsigned degree : {7u, 11u, 15u, 19u}) {
        if (!left) {
            left = try_zone(expr, degree, opts);
            if (left) left_degree = degree;
        }
        if (!right) {
            right = try_zone(mirrored, degree, opts);
            if (right) right_degree = degree;
        }
        if (left && right) break;
    }
    if (!left || !right) {
        cert.status = claim_status::undecided;
        cert.note = "polynomial envelopes up to degree 19 could not separate the expression from zero";
        return cert;
    }
    cert.status = claim_status::verified;
    cert.leaf_count = left->leaf_count + right->leaf_count;
    cert.max_depth_reached = std::max(left->max_depth_reached, right->max_depth_reached);
    std::ostringstream note;
    note << "lower zone envelope degree " << left_degree << "; upper zone envelope degree "
         << right_degree;
    cert.note = note.str();
    return cert;
}

}  // namespace trigcert
