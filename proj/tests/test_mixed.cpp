#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trigcert/approx.hpp"
#include "trigcert/enclosure.hpp"
#include "trigcert/mixed_trig.hpp"
#include "trigcert/pi.hpp"

using trigcert::claim_status;
using trigcert::interval;
using trigcert::mixed_trig_expr;
using trigcert::pi_expr;
using trigcert::pi_poly;
using trigcert::prove_mixed_positive;
using trigcert::rational;

namespace {

const pi_expr half_pi(rational(1, 2), 1);

// (pi^2 - 4x^2) sin x - x P(pi/2 - x) cos x for a polynomial P given in the
// mirrored variable
mixed_trig_expr ratio_comparison(const pi_poly& p_in_t, int direction) {
    mixed_trig_expr e;
    const pi_expr sign(direction);
    e.add_term(0, 1, 0, sign * pi_expr(rational(1), 2));
    e.add_term(2, 1, 0, sign * pi_expr(-4));
    const pi_poly composed = p_in_t.compose_affine(half_pi, pi_expr(-1));
    e.add_poly_times(composed, 1, 0, 1, sign * pi_expr(-1));
    return e;
}

}  // namespace

TEST_CASE("terms accumulate and cancel exactly") {
    mixed_trig_expr e;
    e.add_term(1, 2, 0, pi_expr(rational(1, 3)));
    e.add_term(1, 2, 0, pi_expr(rational(2, 3)));
    CHECK(e.terms().size() == 1);
    e.add_term(1, 2, 0, pi_expr(-1));
    CHECK(e.is_zero());
}

TEST_CASE("mirroring about pi/2 swaps sine and cosine and re-expands powers") {
    mixed_trig_expr e;
    e.add_term(2, 1, 0, pi_expr(1));  // v^2 sin v
    const mixed_trig_expr m = e.flipped_about_half_pi();
    // (pi/2 - s)^2 cos s = (pi^2/4) cos s - pi s cos s + s^2 cos s
    CHECK(m.terms().size() == 3);
    const interval at = m.evaluate_d(interval(0.3));
    const interval direct = e.evaluate_d(interval(1.5707963267948966 - 0.3));
    CHECK(at.lo <= direct.hi + 1e-12);
    CHECK(at.hi >= direct.lo - 1e-12);
}

TEST_CASE("double mirror is the identity") {
    mixed_trig_expr e;
    e.add_term(3, 1, 2, pi_expr(rational(5, 7)));
    e.add_term(0, 0, 1, pi_expr(rational(-1, 2), 1));
    const mixed_trig_expr twice = e.flipped_about_half_pi().flipped_about_half_pi();
    CHECK(twice.terms().size() == e.terms().size());
    for (const auto& [k, c] : e.terms()) {
        auto it = twice.terms().find(k);
        REQUIRE(it != twice.terms().end());
        CHECK((it->second - c).is_zero());
    }
}

TEST_CASE("display names the variable and the trig factors") {
    mixed_trig_expr e;
    e.add_term(2, 1, 0, pi_expr(-4));
    e.add_term(1, 0, 1, pi_expr(rational(1), 1));
    const std::string s = e.to_string('x');
    CHECK(s.find("x^2") != std::string::npos);
    CHECK(s.find("sin(x)") != std::string::npos);
    CHECK(s.find("cos(x)") != std::string::npos);
}

TEST_CASE("positivity of a strictly positive mixed expression") {
    // 2 - sin(v) cos(v) stays above 1 on the whole interval
    mixed_trig_expr e;
    e.add_term(0, 0, 0, pi_expr(2));
    e.add_term(0, 1, 1, pi_expr(-1));
    const auto cert = prove_mixed_positive(e);
    CHECK(cert.status == claim_status::verified);
}

TEST_CASE("refutation finds a certified negative point") {
    // sin(v) - v is negative everywhere inside the interval
    mixed_trig_expr e;
    e.add_term(0, 1, 0, pi_expr(1));
    e.add_term(1, 0, 0, pi_expr(-1));
    const auto cert = prove_mixed_positive(e);
    CHECK(cert.status == claim_status::refuted);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->description.find("negative") != std::string::npos);
}

TEST_CASE("identically zero input is rejected") {
    const auto cert = prove_mixed_positive(mixed_trig_expr{});
    CHECK(cert.status == claim_status::refuted);
    REQUIRE(cert.witness.has_value());
}

TEST_CASE("ratio bound comparisons certify in both directions") {
    SUBCASE("degree four lower truncation stays below the ratio") {
        const auto lower = trigcert::taylor_bound(trigcert::series_id::psi_product, 4);
        const auto cert = prove_mixed_positive(ratio_comparison(lower.poly, 1));
        CHECK(cert.status == claim_status::verified);
        CHECK(cert.note.find("envelope degree") != std::string::npos);
    }
    SUBCASE("degree five upper truncation stays above the ratio") {
        const auto upper = trigcert::taylor_bound(trigcert::series_id::psi_product, 5);
        const auto cert = prove_mixed_positive(ratio_comparison(upper.poly, -1));
        CHECK(cert.status == claim_status::verified);
    }
    SUBCASE("the lower truncation claim reversed is refuted") {
        const auto lower = trigcert::taylor_bound(trigcert::series_id::psi_product, 4);
        const auto cert = prove_mixed_positive(ratio_comparison(lower.poly, -1));
        CHECK(cert.status == claim_status::refuted);
        REQUIRE(cert.witness.has_value());
    }
}

TEST_CASE("sign scan spots deep but certain failures") {
    // cos(v) - sin(v) changes sign at pi/4
    mixed_trig_expr e;
    e.add_term(0, 0, 1, pi_expr(1));
    e.add_term(0, 1, 0, pi_expr(-1));
    const auto cert = prove_mixed_positive(e);
    CHECK(cert.status == claim_status::refuted);
}
