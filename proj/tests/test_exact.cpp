#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trigcert/interval.hpp"
#include "trigcert/pi.hpp"
#include "trigcert/pi_expr.hpp"
#include "trigcert/rational.hpp"
#include "trigcert/rational_interval.hpp"

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
    int64_t next_in(int64_t lo, int64_t hi) {  // inclusive
        return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

rational random_rational(xorshift64& rng) {
    const int64_t num = rng.next_in(-999, 999);
    const int64_t den = rng.next_in(1, 999);
    return rational(num) / den;
}

pi_expr random_pi_expr(xorshift64& rng) {
    pi_expr e;
    const int terms = static_cast<int>(rng.next_in(0, 4));
    for (int i = 0; i < terms; ++i) {
        e += pi_expr(random_rational(rng), static_cast<int>(rng.next_in(-6, 6)));
    }
    return e;
}

// Exact value of a pi_expr at a rational surrogate for pi.
rational eval_at_rational(const pi_expr& e, const rational& p) {
    rational acc = 0;
    for (const auto& [exp, c] : e.terms()) acc += c * rat_pow(p, exp);
    return acc;
}

// Reference digits: 3.141592653589793238462643383... bracketed as exact rationals.
const rational pi_ref_lo = rational(integer("3141592653589793238462643")) / rational(int_pow(integer(10), 24));
const rational pi_ref_hi = rational(integer("3141592653589793238462644")) / rational(int_pow(integer(10), 24));

}  // namespace

TEST_CASE("pi rational enclosure widths and containment") {
    for (unsigned bits : {53u, 64u, 128u, 256u, 1024u}) {
        const rational_interval iv = pi_enclosure_rational(bits);
        CHECK(iv.lo < iv.hi);
        CHECK(iv.lo < pi_ref_hi);
        CHECK(iv.hi > pi_ref_lo);
        const rational max_width = rat_pow(rational(2), 1 - static_cast<int>(bits));
        CHECK(iv.width() <= max_width);
        const rational mid = iv.mid();
        rational err = mid - pi_ref_hi;
        if (err < 0) err = pi_ref_lo - mid;
        CHECK(err < rational(1) / rational(int_pow(integer(10), 15)));
    }
    // refinement is genuine: 64-bit enclosure is strictly narrower than 53-bit
    CHECK(pi_enclosure_rational(64).width() < pi_enclosure_rational(53).width());
}

TEST_CASE("pi double enclosure is the 1-ulp bracket") {
    const interval& iv = pi_interval();
    CHECK(iv.lo == 3.141592653589793);
    CHECK(iv.hi == 3.1415926535897936);
    CHECK(iv.hi == std::nextafter(iv.lo, 4.0));
    const interval& half = half_pi_interval();
    CHECK(half.lo == 1.5707963267948966);
    CHECK(half.hi == 1.5707963267948968);
}

TEST_CASE("pi_expr evaluation encloses reference values") {
    const pi_expr two_over_pi(rational(2), -1);
    const interval v = two_over_pi.evaluate_d();
    CHECK(v.lo <= 0.6366197723675813);
    CHECK(v.hi >= 0.6366197723675814);
    CHECK(v.width() < 1e-14);

    const pi_expr zero;
    const interval z = zero.evaluate_d();
    CHECK(z.lo == 0.0);
    CHECK(z.hi == 0.0);

    // 16/pi^2 - 8/3 = -1.045527728389262323564595...
    const pi_expr mixed = pi_expr(rational(16), -2) - pi_expr(rational(8) / 3);
    const interval m = mixed.evaluate_d();
    CHECK(m.lo <= -1.0455277283892623 + 1e-13);
    CHECK(m.hi >= -1.0455277283892623 - 1e-13);
    CHECK(m.width() < 1e-12);
    const rational_interval mr = mixed.evaluate(pi_enclosure_rational(128));
    const rational ref_lo = rational(integer("-1045527728389262323564596")) / rational(int_pow(integer(10), 24));
    const rational ref_hi = rational(integer("-1045527728389262323564595")) / rational(int_pow(integer(10), 24));
    CHECK(mr.lo <= ref_hi);
    CHECK(mr.hi >= ref_lo);
    CHECK(mr.width() < rational(1) / rational(int_pow(integer(10), 30)));
}

TEST_CASE("pi_expr exact signs") {
    const pi_expr a = pi_expr(1) - pi_expr(rational(4), -2);
    CHECK(a.sign() == 1);
    CHECK(pi_expr().sign() == 0);
    const pi_expr c2 = pi_expr(rational(1) / 3, 2) - pi_expr(4);
    CHECK(c2.sign() == -1);
    // tiny but decidable: pi^2 - 9.8696 > 0 and pi^2 - 9.8697 < 0
    CHECK((pi_expr(rational(1), 2) - pi_expr(rational(98696) / 10000)).sign() == 1);
    CHECK((pi_expr(rational(1), 2) - pi_expr(rational(98697) / 10000)).sign() == -1);
}

TEST_CASE("pi_expr ring axioms on random instances") {
    xorshift64 rng(0x9e3779b97f4a7c15ull);
    for (int i = 0; i < 1000; ++i) {
        const pi_expr a = random_pi_expr(rng);
        const pi_expr b = random_pi_expr(rng);
        const pi_expr c = random_pi_expr(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == pi_expr());
        CHECK(a + pi_expr() == a);
        CHECK(a * pi_expr(1) == a);
    }
}

TEST_CASE("pi_expr canonical form stores no zero coefficients") {
    xorshift64 rng(0x51a7b2c9d3e4f501ull);
    for (int i = 0; i < 1000; ++i) {
        pi_expr a = random_pi_expr(rng);
        pi_expr b = random_pi_expr(rng);
        const pi_expr s = a + b - b;
        CHECK(s == a);
        for (const auto& [e, coeff] : s.terms()) {
            (void)e;
            CHECK(coeff != 0);
        }
    }
}

TEST_CASE("interval evaluation contains exact values at pi surrogates") {
    xorshift64 rng(0xc0ffee1234567u);
    const rational_interval pr = pi_enclosure_rational(64);
    const interval& pd = pi_interval();
    for (int i = 0; i < 500; ++i) {
        const pi_expr e = random_pi_expr(rng);
        // random rational surrogate inside both enclosures
        const rational t = rational(rng.next_in(0, 1000)) / 1000;
        rational surrogate = pr.lo + t * (pr.hi - pr.lo);
        if (surrogate < rational_from_double(pd.lo)) surrogate = rational_from_double(pd.lo);
        if (surrogate > rational_from_double(pd.hi)) surrogate = rational_from_double(pd.hi);
        const rational exact = eval_at_rational(e, surrogate);

        const rational_interval vr = e.evaluate(pr);
        CHECK(vr.lo <= exact);
        CHECK(exact <= vr.hi);

        const interval vd = e.evaluate_d(pd);
        CHECK(rational_from_double(vd.lo) <= exact);
        CHECK(exact <= rational_from_double(vd.hi));
    }
}

TEST_CASE("interval arithmetic outward rounding encloses exact rational results") {
    xorshift64 rng(0xabcdef987654321ull);
    for (int i = 0; i < 2000; ++i) {
        const double a = static_cast<double>(rng.next_in(-1000000, 1000000)) / 997.0;
        const double b = static_cast<double>(rng.next_in(-1000000, 1000000)) / 991.0;
        const double c = static_cast<double>(rng.next_in(-1000000, 1000000)) / 983.0;
        const double d = static_cast<double>(rng.next_in(-1000000, 1000000)) / 977.0;
        const interval x(std::min(a, b), std::max(a, b));
        const interval y(std::min(c, d), std::max(c, d));
        const rational xa = rational_from_double(x.lo), xb = rational_from_double(x.hi);
        const rational ya = rational_from_double(y.lo), yb = rational_from_double(y.hi);

        auto check_contains = [](const interval& iv, const rational& v) {
            CHECK(rational_from_double(iv.lo) <= v);
            CHECK(v <= rational_from_double(iv.hi));
        };
        for (const rational& u : {xa, xb}) {
            for (const rational& v : {ya, yb}) {
                check_contains(x + y, u + v);
                check_contains(x - y, u - v);
                check_contains(x * y, u * v);
                if (!y.contains_zero()) check_contains(x / y, u / v);
            }
        }
    }
}

TEST_CASE("directed double conversion brackets exact rationals") {
    xorshift64 rng(0x123123123123ull);
    for (int i = 0; i < 2000; ++i) {
        const rational q = random_rational(rng) + random_rational(rng) / 1000000;
        const double lo = to_double_down(q);
        const double hi = to_double_up(q);
        CHECK(rational_from_double(lo) <= q);
        CHECK(q <= rational_from_double(hi));
        if (rational_from_double(lo) == q) {
            CHECK(lo == hi);
        } else {
            CHECK(hi == std::nextafter(lo, std::numeric_limits<double>::infinity()));
        }
    }
}

TEST_CASE("rational_interval arithmetic is exact and sign-correct") {
    const rational_interval a(rational(-1) / 3, rational(1) / 2);
    const rational_interval b(rational(2), rational(3));
    const rational_interval s = a + b;
    CHECK(s.lo == rational(5) / 3);
    CHECK(s.hi == rational(7) / 2);
    const rational_interval p = a * b;
    CHECK(p.lo == rational(-1));
    CHECK(p.hi == rational(3) / 2);
    CHECK(p.sign() == 0);
    CHECK(b.sign() == 1);
    CHECK((-b).sign() == -1);
    const rational_interval sq = ri_pow(a, 2);
    CHECK(sq.lo == 0);
    CHECK(sq.hi == rational(1) / 4);
    const rational_interval invb = ri_pow(b, -1);
    CHECK(invb.lo == rational(1) / 3);
    CHECK(invb.hi == rational(1) / 2);
}

TEST_CASE("pi_expr printing") {
    CHECK(pi_expr().to_string() == "0");
    CHECK(pi_expr(rational(2), -1).to_string() == "2*pi^-1");
    CHECK((pi_expr(1) - pi_expr(rational(4), -2)).to_string() == "1 - 4*pi^-2");
    CHECK((pi_expr(rational(1) / 3, 2) - pi_expr(4)).to_string() == "1/3*pi^2 - 4");
    CHECK(pi_expr::pi().to_string() == "pi");
    CHECK((pi_expr(rational(-1), 1)).to_string() == "-pi");
}

TEST_CASE("interval pow handles zero-straddling even powers") {
    const interval a(-2.0, 1.5);
    const interval sq = iv_pow(a, 2);
    CHECK(sq.lo == 0.0);
    CHECK(sq.hi >= 4.0);
    const interval cube = iv_pow(a, 3);
    CHECK(cube.lo <= -8.0);
    CHECK(cube.hi >= 3.375);
}
