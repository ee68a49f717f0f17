#include "trigcert/prover.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trigcert/pi.hpp"
#include "trigcert/streams.hpp"

namespace trigcert {

std::string claim_status_name(claim_status s) {
    switch (s) {
        case claim_status::verified: return "verified";
        case claim_status::refuted: return "refuted";
        case claim_status::undecided: return "undecided";
    }
    return "undecided";
}

claim_term claim_term::make_function(function_id f) {
    claim_term t;
    t.kind = kind_t::function;
    t.fn = f;
    return t;
}

claim_term claim_term::make_polynomial(bound_poly bp) {
    claim_term t;
    t.kind = kind_t::polynomial;
    t.poly = std::move(bp);
    return t;
}

namespace {

std::string rational_str(const rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// Rational lower bound for a pi_expr known (or required) to be positive.
rational positive_lower_bound(const pi_expr& e) {
    unsigned bits = 128;
    for (;;) {
        rational_interval iv = e.evaluate(pi_enclosure_rational(bits));
        if (iv.lo > 0) return iv.lo;
        if (bits > (1u << 20)) throw std::invalid_argument("expression is not certifiably positive");
        bits *= 2;
    }
}

// Local expansion view of one claim side at an endpoint.
struct side_view {
    bool ok = false;
    int min_index = 0;
    int finite_degree = -2;  // top index of a polynomial view; -2 marks an infinite stream
    rational majorant_a;
    rational majorant_r;
    std::function<pi_expr(int)> coeff;
};

side_view view_at(const claim_term& term, const pi_expr& point, int direction) {
    side_view v;
    if (term.kind == claim_term::kind_t::function) {
        auto s = local_expansion(term.fn, point, direction);
        if (!s) return v;
        v.ok = true;
        v.min_index = s->min_index;
        v.finite_degree = -2;
        v.majorant_a = s->majorant_A;
        v.majorant_r = s->majorant_r;
        v.coeff = s->coeff;
        return v;
    }
    const bound_poly& bp = term.poly;
    pi_expr principal = bp.principal_coeff;
    if (!principal.is_zero() && !(point.is_zero() && direction == 1)) {
        return v;  // the singular term only has a plain expansion at 0, rightward
    }
    pi_poly shifted =
        bp.poly.compose_affine(point, direction > 0 ? pi_expr(1) : pi_expr(-1));
    v.ok = true;
    v.min_index = principal.is_zero() ? 0 : -1;
    v.finite_degree = shifted.degree();
    v.coeff = [shifted, principal](int k) {
        if (k == -1) return principal;
        if (k < 0 || k > shifted.degree()) return pi_expr();
        return shifted.coeff(static_cast<unsigned>(k));
    };
    return v;
}

struct endpoint_result {
    enum class kind_t { proved, refuted_direction, unavailable };
    kind_t kind = kind_t::unavailable;
    rational rho;
    int order = 0;
    std::string note;
};

// Certify that the expansion difference (rhs - lhs) is positive on a one-sided
// neighbourhood of the endpoint: locate the first nonzero coefficient, bound
// it below, and shrink rho until the remaining terms are dominated through the
// geometric tail majorant.
endpoint_result analyze_endpoint(const side_view& lv, const side_view& rv,
                                 const rational& max_rho, int order_cap) {
    endpoint_result res;
    if (!lv.ok || !rv.ok) {
        res.note = "no local expansion";
        return res;
    }
    const int start = std::min(lv.min_index, rv.min_index);
    int m = 0;
    pi_expr dm;
    bool found = false;
    for (int k = start; k <= order_cap; ++k) {
        pi_expr d = rv.coeff(k) - lv.coeff(k);
        if (!d.is_zero()) {
            m = k;
            dm = d;
            found = true;
            break;
        }
    }
    if (!found) {
        res.note = "difference vanishes through the order cap";
        return res;
    }
    res.order = m;
    if (dm.sign() < 0) {
        res.kind = endpoint_result::kind_t::refuted_direction;
        return res;
    }
    const rational dm_lb = positive_lower_bound(dm);

    // Pull extra stream coefficients into the explicit sum: each exact |d_k|
    // is at most its majorant term, so a longer explicit prefix only enlarges
    // the certified radius, often all the way to max_rho.
    int K = std::max({m, lv.finite_degree, rv.finite_degree});
    if (lv.finite_degree == -2 || rv.finite_degree == -2) K = std::max(K, m + 24);
    const rational_interval pi_iv = pi_enclosure_rational(192);
    std::vector<rational> mag;  // |d_k| upper bounds for m < k <= K
    for (int k = m + 1; k <= K; ++k) {
        pi_expr d = rv.coeff(k) - lv.coeff(k);
        if (d.is_zero()) {
            mag.emplace_back(0);
            continue;
        }
        rational_interval e = d.evaluate(pi_iv);
        mag.push_back(std::max(rational(-e.lo), e.hi));
    }
    rational a_tail = 0, r_tail = 0;
    if (lv.finite_degree == -2) {
        a_tail += lv.majorant_a;
        r_tail = std::max(r_tail, lv.majorant_r);
    }
    if (rv.finite_degree == -2) {
        a_tail += rv.majorant_a;
        r_tail = std::max(r_tail, rv.majorant_r);
    }

    rational rho = max_rho;
    if (r_tail > 0) rho = std::min(rho, rational(1) / (2 * r_tail));
    for (int halvings = 0; halvings < 80; ++halvings) {
        rational total = 0, pw = 1;
        for (const rational& u : mag) {
            pw *= rho;
            total += u * pw;
        }
        if (a_tail > 0) {
            const rational rr = r_tail * rho;
            total += a_tail * rat_pow(r_tail, K + 1) * rat_pow(rho, K + 1 - m) / (1 - rr);
        }
        if (total < dm_lb) {
            res.kind = endpoint_result::kind_t::proved;
            res.rho = rho;
            return res;
        }
        rho /= 2;
    }
    res.note = "tail majorant did not certify";
    return res;
}

interval eval_term_d(const claim_term& t, const interval& v) {
    if (t.kind == claim_term::kind_t::function) return enclose(t.fn, v);
    return t.poly.evaluate_d(v);
}

// Certified enclosure of a term at an exact (possibly irrational) point.
rational_interval eval_term_at(const claim_term& t, const pi_expr& pt, unsigned bits) {
    const rational_interval pi_iv = pi_enclosure_rational(bits);
    const rational_interval x = pt.evaluate(pi_iv);
    if (t.kind == claim_term::kind_t::function) return rat_enclose(t.fn, x, bits);
    return t.poly.evaluate(x, pi_iv);
}

rational_interval eval_term_box(const claim_term& t, const rational_interval& x, unsigned bits) {
    if (t.kind == claim_term::kind_t::function) return rat_enclose(t.fn, x, bits);
    return t.poly.evaluate(x, pi_enclosure_rational(bits));
}

// The expansion difference starts with a negative coefficient at an endpoint:
// turn that into a concrete certified witness by stepping toward the endpoint
// until the pointwise difference enclosure is strictly negative.
bool hunt_endpoint_witness(const claim_term& lhs, const claim_term& rhs, const pi_expr& point,
                           int direction, const rational& start, bound_cert& cert) {
    rational u = start;
    unsigned bits = 320;
    for (int j = 0; j < 48; ++j) {
        const pi_expr pt = direction > 0 ? point + pi_expr(u) : point - pi_expr(u);
        try {
            const rational_interval diff =
                eval_term_at(rhs, pt, bits) - eval_term_at(lhs, pt, bits);
            if (diff.hi < 0) {
                cert.status = claim_status::refuted;
                cert.witness = witness_info{
                    pt.to_string(),
                    "difference enclosure is strictly negative at this point"};
                return true;
            }
        } catch (const std::domain_error&) {
        }
        u /= 2;
        if (j % 8 == 7) bits *= 2;
    }
    return false;
}

std::string endpoint_note(const char* label, const endpoint_result& er) {
    std::ostringstream os;
    os << label << ": ";
    if (er.kind == endpoint_result::kind_t::proved) {
        os << "expansion order " << er.order << ", certified width " << rational_str(er.rho);
    } else {
        os << er.note;
    }
    return os.str();
}

bound_cert prove_less_subdivide(const claim_term& lhs, const claim_term& rhs,
                                const pi_expr& lo, const pi_expr& hi,
                                const prove_options& opts) {
    bound_cert cert;
    const pi_expr len = hi - lo;
    if (len.sign() <= 0) throw std::invalid_argument("prove_less: empty domain");
    const rational len_lb = positive_lower_bound(len);
    const rational max_rho = len_lb / 2;

    const endpoint_result left =
        analyze_endpoint(view_at(lhs, lo, 1), view_at(rhs, lo, 1), max_rho, 64);
    const endpoint_result right =
        analyze_endpoint(view_at(lhs, hi, -1), view_at(rhs, hi, -1), max_rho, 64);

    if (left.kind == endpoint_result::kind_t::refuted_direction) {
        if (hunt_endpoint_witness(lhs, rhs, lo, 1, max_rho, cert)) return cert;
        cert.note = "negative expansion gap at the left endpoint, but no certified witness";
        return cert;
    }
    if (right.kind == endpoint_result::kind_t::refuted_direction) {
        if (hunt_endpoint_witness(lhs, rhs, hi, -1, max_rho, cert)) return cert;
        cert.note = "negative expansion gap at the right endpoint, but no certified witness";
        return cert;
    }

    cert.note = endpoint_note("left", left) + "; " + endpoint_note("right", right);
    rational rho_l = 0, rho_r = 0;
    if (left.kind == endpoint_result::kind_t::proved) {
        rho_l = left.rho;
        ++cert.leaf_count;
    }
    if (right.kind == endpoint_result::kind_t::proved) {
        rho_r = right.rho;
        ++cert.leaf_count;
    }

    const double dlo = (lo + pi_expr(rho_l)).evaluate_d().lo;
    const double dhi = (hi - pi_expr(rho_r)).evaluate_d().hi;

    std::size_t undecided_boxes = 0;
    std::string first_undecided;
    if (dlo < dhi) {
        struct box {
            double lo, hi;
            int depth;
        };
        std::vector<box> stack{{dlo, dhi, 0}};
        while (!stack.empty()) {
            const box b = stack.back();
            stack.pop_back();
            cert.max_depth_reached = std::max(cert.max_depth_reached, b.depth);
            const interval v(b.lo, b.hi);
            bool positive = false, negative = false;
            try {
                const interval diff = eval_term_d(rhs, v) - eval_term_d(lhs, v);
                if (diff.lo > 0) positive = true;
                else if (diff.hi < 0) negative = true;
            } catch (const std::domain_error&) {
            }
            if (positive) {
                ++cert.leaf_count;
                continue;
            }
            if (negative) {
                const rational q = rational_from_double(v.mid());
                const pi_expr pt(q);
                if ((pt - lo).sign() > 0 && (hi - pt).sign() > 0) {
                    cert.status = claim_status::refuted;
                    std::ostringstream os;
                    os << "difference enclosure is at most " << (eval_term_d(rhs, v) - eval_term_d(lhs, v)).hi
                       << " on the surrounding box";
                    cert.witness = witness_info{rational_str(q), os.str()};
                    return cert;
                }
            }
            if (b.depth >= opts.max_depth || (b.hi - b.lo) < opts.min_width) {
                // Out of double-precision budget: retry this one box with
                // exact rational endpoints before conceding it.
                const rational_interval rbox(rational_from_double(b.lo),
                                             rational_from_double(b.hi));
                bool exact_positive = false;
                bool exact_negative = false;
                try {
                    const rational_interval ediff =
                        eval_term_box(rhs, rbox, opts.precision_bits) -
                        eval_term_box(lhs, rbox, opts.precision_bits);
                    exact_positive = ediff.lo > 0;
                    exact_negative = ediff.hi < 0;
                } catch (const std::domain_error&) {
                }
                if (exact_positive) {
                    ++cert.leaf_count;
                    continue;
                }
                if (exact_negative) {
                    const rational q = (rbox.lo + rbox.hi) / 2;
                    const pi_expr pt(q);
                    if ((pt - lo).sign() > 0 && (hi - pt).sign() > 0) {
                        cert.status = claim_status::refuted;
                        cert.witness = witness_info{
                            rational_str(q),
                            "difference enclosure is strictly negative on the surrounding box"};
                        return cert;
                    }
                }
                if (undecided_boxes == 0) {
                    std::ostringstream os;
                    os << "[" << b.lo << ", " << b.hi << "]";
                    first_undecided = os.str();
                }
                ++undecided_boxes;
                if (undecided_boxes > 5000) {
                    stack.clear();
                }
                continue;
            }
            const double m = v.mid();
            stack.push_back({m, b.hi, b.depth + 1});
            stack.push_back({b.lo, m, b.depth + 1});
        }
    }

    if (undecided_boxes == 0) {
        cert.status = claim_status::verified;
    } else {
        cert.status = claim_status::undecided;
        std::ostringstream os;
        os << "; " << undecided_boxes << " box(es) hit the depth or width budget, first "
           << first_undecided;
        cert.note += os.str();
    }
    return cert;
}

// Exact sign of the left-shifted polynomial at the offset u (the real point
// is lo + u), reporting a refutation witness when the sign is not positive
// and the point lies strictly inside the domain.
bool exact_sign_refutes(const pi_poly& shifted, const pi_expr& lo, const pi_expr& len,
                        const rational& u, bound_cert& cert) {
    if (!(u > 0)) return false;
    if ((pi_expr(u) - len).sign() >= 0) return false;
    const int s = shifted.evaluate(pi_expr(u)).sign();
    if (s > 0) return false;
    cert.status = claim_status::refuted;
    cert.witness = witness_info{(lo + pi_expr(u)).to_string(),
                                s == 0 ? "polynomial vanishes at this point (exact)"
                                       : "polynomial is negative at this point (exact sign)"};
    return true;
}

}  // namespace

std::optional<expansion_gap> local_difference_order(const claim_term& lhs,
                                                    const claim_term& rhs,
                                                    const pi_expr& point, int direction,
                                                    int order_cap) {
    const side_view lv = view_at(lhs, point, direction);
    const side_view rv = view_at(rhs, point, direction);
    if (!lv.ok || !rv.ok) return std::nullopt;
    for (int k = std::min(lv.min_index, rv.min_index); k <= order_cap; ++k) {
        const pi_expr d = rv.coeff(k) - lv.coeff(k);
        if (!d.is_zero()) return expansion_gap{k, d.sign()};
    }
    return std::nullopt;
}

bound_cert prove_poly_positive(const pi_poly& p, const pi_expr& lo, const pi_expr& hi,
                               const prove_options& opts) {
    bound_cert cert;
    const pi_expr len = hi - lo;
    if (len.sign() <= 0) throw std::invalid_argument("prove_poly_positive: empty domain");
    const rational len_lb = positive_lower_bound(len);

    if (p.is_zero()) {
        cert.status = claim_status::refuted;
        cert.witness = witness_info{(lo + pi_expr(len_lb / 2)).to_string(),
                                    "polynomial is identically zero"};
        return cert;
    }

    pi_poly q = p.compose_affine(lo, pi_expr(1));
    const unsigned m0 = q.low_order();
    pi_poly r = *q.strip_low_order(m0);

    if (r.coeff(0).sign() < 0) {
        rational u = len_lb / 2;
        for (int j = 0; j < 400; ++j) {
            if (exact_sign_refutes(q, lo, len, u, cert)) return cert;
            u /= 2;
        }
        cert.note = "negative leading behaviour at the left endpoint, but no exact witness";
        return cert;
    }

    unsigned mb = 0;
    while (mb < 32 && r.evaluate(len).is_zero()) {
        auto d = r.deflate(len);
        if (!d) break;
        r = *d;
        ++mb;
    }
    if (mb % 2 == 1) r = -r;
    {
        std::ostringstream os;
        os << "left vanishing order " << m0 << "; right root multiplicity " << mb;
        cert.note = os.str();
    }

    if (r.evaluate(len).sign() < 0) {
        // A sign change strictly inside the domain: locate an exact witness on
        // successively finer rational grids.
        for (unsigned grid : {64u, 512u, 4096u}) {
            for (unsigned i = 1; i < grid; ++i) {
                if (exact_sign_refutes(q, lo, len, len_lb * i / grid, cert)) return cert;
            }
        }
        cert.note += "; sign change detected but no rational witness located";
        return cert;
    }

    const int deg = r.degree();
    struct level_data {
        std::vector<rational_interval> coeffs;
        rational len_ub;
    };
    std::vector<level_data> levels;
    auto level = [&](std::size_t i) -> const level_data& {
        while (levels.size() <= i) {
            const unsigned bits = opts.precision_bits << (2 * levels.size());
            const rational_interval pi_iv = pi_enclosure_rational(bits);
            level_data ld;
            for (int k = 0; k <= deg; ++k) {
                ld.coeffs.push_back(r.coeff(static_cast<unsigned>(k)).evaluate(pi_iv));
            }
            ld.len_ub = len.evaluate(pi_iv).hi;
            levels.push_back(std::move(ld));
        }
        return levels[i];
    };
    auto eval_box = [&](const rational_interval& x, const level_data& ld) {
        rational_interval acc = ld.coeffs[static_cast<std::size_t>(deg)];
        for (int k = deg - 1; k >= 0; --k) acc = acc * x + ld.coeffs[static_cast<std::size_t>(k)];
        return acc;
    };

    struct box {
        rational lo, hi;
        int depth;
        std::size_t lvl;
    };
    const std::size_t max_level = 2;
    std::vector<box> stack{{rational(0), level(0).len_ub, 0, 0}};
    std::size_t undecided_boxes = 0;
    while (!stack.empty()) {
        box b = stack.back();
        stack.pop_back();
        cert.max_depth_reached = std::max(cert.max_depth_reached, b.depth);
        const level_data& ld = level(b.lvl);
        if (b.lo > 0 && (pi_expr(b.lo) - len).sign() >= 0) continue;  // beyond the domain
        const rational_interval e = eval_box(rational_interval(b.lo, b.hi), ld);
        if (e.lo > 0) {
            ++cert.leaf_count;
            continue;
        }
        const rational mid = (b.lo + b.hi) / 2;
        if (e.hi < 0) {
            if (exact_sign_refutes(q, lo, len, mid, cert)) return cert;
        }
        const int depth_cap = opts.max_depth + 20 * static_cast<int>(b.lvl);
        if (b.depth >= depth_cap) {
            for (const rational& u : {b.lo, mid, b.hi}) {
                if (exact_sign_refutes(q, lo, len, u, cert)) return cert;
            }
            if (b.lvl < max_level) {
                stack.push_back({b.lo, b.hi, b.depth, b.lvl + 1});
            } else {
                ++undecided_boxes;
            }
            continue;
        }
        stack.push_back({mid, b.hi, b.depth + 1, b.lvl});
        stack.push_back({b.lo, mid, b.depth + 1, b.lvl});
    }

    if (undecided_boxes == 0) {
        cert.status = claim_status::verified;
    } else {
        cert.status = claim_status::undecided;
        std::ostringstream os;
        os << "; " << undecided_boxes << " box(es) exhausted depth and precision budgets";
        cert.note += os.str();
    }
    return cert;
}

bound_cert prove_less(const claim_term& lhs, const claim_term& rhs, const pi_expr& lo,
                      const pi_expr& hi, const prove_options& opts) {
    if (lhs.kind == claim_term::kind_t::polynomial &&
        rhs.kind == claim_term::kind_t::polynomial) {
        pi_poly diff = rhs.poly.poly - lhs.poly.poly;
        const pi_expr principal = rhs.poly.principal_coeff - lhs.poly.principal_coeff;
        if (!principal.is_zero()) {
            if (lo.sign() < 0) {
                bound_cert cert;
                cert.note = "singular term over a domain reaching negative values";
                return cert;
            }
            // v > 0 on the domain, so multiplying through by v preserves the sign
            diff = diff * pi_poly::monomial(pi_expr(1), 1) + pi_poly(principal);
        }
        return prove_poly_positive(diff, lo, hi, opts);
    }
    return prove_less_subdivide(lhs, rhs, lo, hi, opts);
}

}  // namespace trigcert
