#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trigcert/approx.hpp"
#include "trigcert/catalog.hpp"
#include "trigcert/pi.hpp"

using namespace trigcert;

namespace {

pi_poly sinc_partial_deg4() {
    return pi_poly(std::vector<pi_expr>{pi_expr(1), pi_expr(), pi_expr(rational(-1) / 6), pi_expr(),
                                        pi_expr(rational(1) / 120)});
}

}  // namespace

TEST_CASE("series partial sums") {
    CHECK(series_partial(series_id::sinc, 4) == sinc_partial_deg4());
    CHECK(series_partial(series_id::sinc, 5) == sinc_partial_deg4());
    const pi_poly tan3 = series_partial(series_id::tan, 3);
    CHECK(tan3.coeff(1) == pi_expr(1));
    CHECK(tan3.coeff(3) == pi_expr(rational(1) / 3));
    const pi_poly cot3 = series_partial(series_id::cot, 3);
    CHECK(cot3.coeff(1) == pi_expr(rational(-1) / 3));
    CHECK(cot3.coeff(3) == pi_expr(rational(-1) / 45));
    const pi_poly psi2 = series_partial(series_id::psi_product, 2);
    CHECK(psi2.coeff(0) == pi_expr(8));
    CHECK(psi2.coeff(1) == pi_expr(rational(8), -1));
    CHECK(psi2.coeff(2) == pi_expr(rational(16), -2) - pi_expr(rational(8) / 3));
}

TEST_CASE("truncation bound sides and names") {
    CHECK(taylor_bound(series_id::sinc, 2).side == bound_side::lower);
    CHECK(taylor_bound(series_id::sinc, 2).name == "T2L(sinc)");
    CHECK(taylor_bound(series_id::sinc, 4).side == bound_side::upper);
    CHECK(taylor_bound(series_id::sinc, 0).side == bound_side::upper);
    CHECK(taylor_bound(series_id::sinc, 6).side == bound_side::lower);
    CHECK(taylor_bound(series_id::tan, 5).side == bound_side::lower);
    CHECK(taylor_bound(series_id::cot, 3).side == bound_side::upper);
    CHECK(taylor_bound(series_id::cot, 3).has_principal());
    CHECK(taylor_bound(series_id::cot, 3).var == bound_var::t);
    CHECK(taylor_bound(series_id::steckin_alpha, 1).side == bound_side::upper);
    CHECK(taylor_bound(series_id::steckin_alpha, 2).side == bound_side::lower);
    CHECK(taylor_bound(series_id::steckin_alpha, 2).name == "T2L(f)");
    CHECK(taylor_bound(series_id::becker_stark_C, 4).side == bound_side::upper);
    CHECK(taylor_bound(series_id::becker_stark_C, 4).name == "T4U(phi)");
    for (unsigned n : {0u, 2u, 4u}) {
        CHECK(taylor_bound(series_id::psi_product, n).side == bound_side::lower);
        CHECK(taylor_bound(series_id::psi_product, n + 1).side == bound_side::upper);
    }
    CHECK(taylor_bound(series_id::psi_product, 4).name == "T4L(psi)");
}

TEST_CASE("two-point cot lower bounds") {
    const bound_poly w1 = two_point_cot_lower(1);
    CHECK(w1.principal_coeff == pi_expr(1));
    CHECK(w1.poly.degree() == 1);
    CHECK(w1.poly.coeff(1) == pi_expr(rational(-4), -2));

    const bound_poly w3 = two_point_cot_lower(3);
    CHECK(w3.poly.coeff(1) == pi_expr(rational(-1) / 3));
    CHECK(w3.poly.coeff(2).is_zero());
    CHECK(w3.poly.coeff(3) == pi_expr(rational(4) / 3, -2) - pi_expr(rational(16), -4));
    CHECK(w3.poly.coeff(3).sign() == -1);
    CHECK_THROWS(two_point_cot_lower(2));
}

TEST_CASE("remainder-series bounds in t") {
    const bound_poly f1 = steckin_upper(1);
    CHECK(!f1.has_principal());
    CHECK(f1.poly.coeff(0) == pi_expr(rational(2), -1));
    CHECK(f1.poly.coeff(1) == pi_expr(rational(-1) / 3));
    const bound_poly f3 = steckin_upper(3);
    CHECK(f3.poly.coeff(3) == pi_expr(rational(-1) / 45));

    const bound_poly s1 = steckin_lower(1);
    CHECK(s1.poly.coeff(0) == pi_expr(rational(2), -1));
    CHECK(s1.poly.coeff(1) == pi_expr(rational(-4), -2));
    const bound_poly s3 = steckin_lower(3);
    CHECK(s3.poly.coeff(1) == pi_expr(rational(-1) / 3));
    CHECK(s3.poly.coeff(3) == pi_expr(rational(4) / 3, -2) - pi_expr(rational(16), -4));
}

TEST_CASE("forced top coefficient for the ratio lower bound") {
    const rational c = rational(1371) / 1000;
    const rational top = forced_ratio_top(2, c, 128);
    // (phi(c) - pi^2) / c^2 = -0.7454583247257481863...
    const double d = to_double_up(top);
    CHECK(d == doctest::Approx(-0.7454583247257482).epsilon(1e-12));

    const bound_poly t6 = becker_stark_lower(2, c);
    CHECK(t6.poly.coeff(0) == pi_expr(rational(1), 2));
    CHECK(t6.poly.coeff(1).is_zero());
    const pi_expr gamma = t6.poly.coeff(2);
    CHECK(gamma.is_rational());
    // the stored coefficient sits just below the exact forced value
    const pi_expr diff = pi_expr(top) - gamma;
    CHECK(diff.sign() == 1);
    const interval diff_iv = diff.evaluate_d();
    CHECK(diff_iv.hi < 1.1e-8);
    CHECK(diff_iv.lo > 0.9e-8);
}

TEST_CASE("catalog printed forms collapse to the expected polynomials") {
    auto s1l = lookup_bound("S1L");
    REQUIRE(s1l.has_value());
    CHECK(s1l->poly == series_partial(series_id::sinc, 2));
    CHECK(s1l->side == bound_side::lower);
    auto s1u = lookup_bound("S1U");
    REQUIRE(s1u.has_value());
    CHECK(s1u->poly == series_partial(series_id::sinc, 4));

    auto q4 = lookup_bound("Q4");
    REQUIRE(q4.has_value());
    CHECK(q4->poly.coeff(0) == pi_expr(1));
    CHECK(q4->poly.coeff(2) == pi_expr(rational(-1) / 6));
    CHECK(q4->poly.coeff(4) == pi_expr(rational(-8), -5));

    auto r4 = lookup_bound("R4");
    REQUIRE(r4.has_value());
    CHECK(r4->poly.coeff(0) == pi_expr(2) - pi_expr(rational(5) / 2, -1));
    CHECK(r4->poly.coeff(2) == pi_expr(rational(-1) / 6));
    CHECK(r4->poly.coeff(4) ==
          pi_expr(rational(-16), -4) + pi_expr(rational(40), -5) + pi_expr(rational(1) / 120));

    auto q1 = lookup_bound("Q1");
    REQUIRE(q1.has_value());
    CHECK(q1->var == bound_var::t);
    CHECK(q1->poly.coeff(1) == pi_expr(rational(-1) / 2));
    auto r1 = lookup_bound("R1");
    REQUIRE(r1.has_value());
    CHECK(r1->poly == steckin_upper(1).poly);

    auto j2u = lookup_bound("J2U");
    REQUIRE(j2u.has_value());
    CHECK(j2u->poly.coeff(0) == pi_expr(1));
    auto j3u = lookup_bound("J3U");
    REQUIRE(j3u.has_value());
    CHECK(j3u->poly.coeff(0) == pi_expr(1));
    auto j2l = lookup_bound("J2L");
    REQUIRE(j2l.has_value());
    CHECK(j2l->poly.coeff(0) == pi_expr(rational(3), -1));
    CHECK(j2l->poly.coeff(2) == pi_expr(rational(-4), -3));
    auto j3l = lookup_bound("J3L");
    REQUIRE(j3l.has_value());
    CHECK(j3l->poly.coeff(0) == pi_expr(rational(5) / 2, -1));
    CHECK(j3l->poly.coeff(4) == pi_expr(rational(-8), -5));

    auto u3 = lookup_bound("U3");
    REQUIRE(u3.has_value());
    CHECK(u3->poly.coeff(0) == pi_expr(rational(1), 2));
    CHECK(u3->poly.coeff(2) == becker_stark_C(2));
    CHECK(u3->poly.coeff(4) == becker_stark_C(3));

    auto s5a = lookup_bound("S5A");
    REQUIRE(s5a.has_value());
    CHECK(s5a->poly == series_partial(series_id::psi_product, 2));
    CHECK(s5a->var == bound_var::t);

    auto t6 = lookup_bound("T6LOW");
    REQUIRE(t6.has_value());
    CHECK(t6->poly.degree() == 2);
}

TEST_CASE("catalog name resolution") {
    for (const auto& name : catalog_names()) {
        auto b = lookup_bound(name);
        REQUIRE(b.has_value());
    }
    CHECK(lookup_bound("T2L(sinc)").has_value());
    CHECK(!lookup_bound("T2U(sinc)").has_value());
    CHECK(lookup_bound("T4U(sinc)").has_value());
    CHECK(lookup_bound("W3L(cot)").has_value());
    CHECK(!lookup_bound("W2L(cot)").has_value());
    CHECK(lookup_bound("F5").has_value());
    CHECK(lookup_bound("SF5").has_value());
    CHECK(!lookup_bound("SF2").has_value());
    CHECK(!lookup_bound("nope").has_value());
    CHECK(lookup_bound("T4L(psi)").has_value());
    CHECK(lookup_bound("T2L(f)").has_value());
    CHECK(lookup_bound("T1U(f)").has_value());
    CHECK(lookup_bound("T4U(phi)").has_value());
}
