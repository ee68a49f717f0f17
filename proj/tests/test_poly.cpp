#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trigcert/pi.hpp"
#include "trigcert/poly.hpp"

using namespace trigcert;

namespace {

struct xorshift64 {
    uint64_t state;
    explicit xorshift64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int64_t next_in(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

rational random_rational(xorshift64& rng) {
    return rational(rng.next_in(-99, 99)) / rng.next_in(1, 40);
}

pi_expr random_pi_expr(xorshift64& rng) {
    pi_expr e;
    const int terms = static_cast<int>(rng.next_in(0, 2));
    for (int i = 0; i < terms; ++i) {
        e += pi_expr(random_rational(rng), static_cast<int>(rng.next_in(-3, 3)));
    }
    return e;
}

pi_poly random_poly(xorshift64& rng, unsigned max_deg) {
    std::vector<pi_expr> cs(static_cast<size_t>(rng.next_in(0, max_deg)) + 1);
    for (auto& c : cs) c = random_pi_expr(rng);
    return pi_poly(std::move(cs));
}

}  // namespace

TEST_CASE("construction trims structural zeros") {
    pi_poly p(std::vector<pi_expr>{pi_expr(1), pi_expr(), pi_expr()});
    CHECK(p.degree() == 0);
    CHECK(pi_poly().is_zero());
    CHECK(pi_poly(pi_expr()).is_zero());
    pi_poly m = pi_poly::monomial(pi_expr(rational(2)), 3);
    CHECK(m.degree() == 3);
    CHECK(m.low_order() == 3);
    CHECK(m.coeff(3) == pi_expr(2));
    CHECK(m.coeff(1).is_zero());
    CHECK(m.coeff(7).is_zero());
}

TEST_CASE("ring identities on random polynomials") {
    xorshift64 rng(0x7a31bc9640d2ull);
    for (int i = 0; i < 200; ++i) {
        const pi_poly a = random_poly(rng, 4);
        const pi_poly b = random_poly(rng, 4);
        const pi_poly c = random_poly(rng, 3);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK(a - a == pi_poly());
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("exact evaluation commutes with arithmetic") {
    xorshift64 rng(0x112233445566ull);
    for (int i = 0; i < 100; ++i) {
        const pi_poly a = random_poly(rng, 4);
        const pi_poly b = random_poly(rng, 3);
        const pi_expr v = random_pi_expr(rng);
        CHECK((a * b).evaluate(v) == a.evaluate(v) * b.evaluate(v));
        CHECK((a + b).evaluate(v) == a.evaluate(v) + b.evaluate(v));
    }
}

TEST_CASE("affine composition agrees with direct evaluation") {
    xorshift64 rng(0x99887766ull);
    for (int i = 0; i < 100; ++i) {
        const pi_poly p = random_poly(rng, 5);
        const pi_expr c0 = random_pi_expr(rng);
        const pi_expr c1 = random_pi_expr(rng);
        const pi_expr v(random_rational(rng));
        const pi_poly q = p.compose_affine(c0, c1);
        CHECK(q.evaluate(v) == p.evaluate(c0 + c1 * v));
    }
}

TEST_CASE("strip_low_order removes an exact monomial factor") {
    pi_poly p = pi_poly::monomial(pi_expr(rational(3)), 2) + pi_poly::monomial(pi_expr::pi(), 5);
    auto s = p.strip_low_order(2);
    REQUIRE(s.has_value());
    CHECK(s->coeff(0) == pi_expr(3));
    CHECK(s->coeff(3) == pi_expr::pi());
    CHECK(!p.strip_low_order(3).has_value());
    CHECK(pi_poly().strip_low_order(4).has_value());
}

TEST_CASE("deflation inverts multiplication by a linear factor") {
    xorshift64 rng(0x5544332211ull);
    for (int i = 0; i < 100; ++i) {
        pi_poly q = random_poly(rng, 4);
        if (q.is_zero()) q = pi_poly(pi_expr(1));
        const pi_expr root = random_pi_expr(rng);
        const pi_poly lin(std::vector<pi_expr>{-root, pi_expr(1)});
        const pi_poly p = lin * q;
        auto d = p.deflate(root);
        REQUIRE(d.has_value());
        CHECK(*d == q);
    }
    // not a root: remainder is structurally nonzero
    const pi_poly p(std::vector<pi_expr>{pi_expr(1), pi_expr(1)});
    CHECK(!p.deflate(pi_expr::pi()).has_value());
}

TEST_CASE("interval evaluation contains the exact value") {
    xorshift64 rng(0xfeedface1234ull);
    const rational_interval pr = pi_enclosure_rational(128);
    for (int i = 0; i < 100; ++i) {
        const pi_poly p = random_poly(rng, 5);
        const rational v = random_rational(rng);
        const pi_expr exact = p.evaluate(pi_expr(v));
        const rational_interval exact_iv = exact.evaluate(pr);

        const rational_interval ri = p.evaluate(rational_interval(v), pr);
        CHECK(ri.lo <= exact_iv.lo);
        CHECK(exact_iv.hi <= ri.hi);

        const interval di = p.evaluate_d(iv_from_rational(v));
        CHECK(rational_from_double(di.lo) <= exact_iv.lo);
        CHECK(exact_iv.hi <= rational_from_double(di.hi));
    }
}

TEST_CASE("bound_poly evaluation includes the singular part") {
    bound_poly b;
    b.principal_coeff = pi_expr(1);
    b.poly = pi_poly(std::vector<pi_expr>{pi_expr(rational(2), -1), pi_expr(rational(-1) / 3)});
    const rational_interval v(rational(1) / 2);
    const rational_interval r = b.evaluate(v, pi_enclosure_rational(64));
    // 1/t + 2/pi - t/3 at t = 1/2: 2 + 2/pi - 1/6 = 2.4699531057009146...
    CHECK(r.lo <= rational(24699531058) / 10000000000);
    CHECK(r.hi >= rational(24699531056) / 10000000000);
    const interval dr = b.evaluate_d(interval(0.5));
    CHECK(dr.lo <= 2.4699531057009148);
    CHECK(dr.hi >= 2.4699531057009144);
}
