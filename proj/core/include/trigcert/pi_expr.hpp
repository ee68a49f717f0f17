#pragma once

#include <map>
#include <string>

#include "trigcert/interval.hpp"
#include "trigcert/pi.hpp"
#include "trigcert/rational.hpp"
#include "trigcert/rational_interval.hpp"

namespace trigcert {

// Exact Laurent polynomial in pi over the rationals: sum of c_e * pi^e with
// integer exponents (possibly negative). Canonical form never stores zero
// coefficients, so structural equality decides value equality (pi is
// transcendental, hence the representation is unique).
class pi_expr {
public:
    pi_expr() = default;
    pi_expr(const rational& constant);
    pi_expr(long long constant);
    pi_expr(const rational& coeff, int pi_exponent);

    static pi_expr pi(int exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    const std::map<int, rational>& terms() const { return terms_; }
    rational coeff(int exponent) const;

    pi_expr& operator+=(const pi_expr& o);
    pi_expr& operator-=(const pi_expr& o);
    pi_expr& operator*=(const pi_expr& o);
    pi_expr operator-() const;

    friend pi_expr operator+(pi_expr a, const pi_expr& b) { return a += b; }
    friend pi_expr operator-(pi_expr a, const pi_expr& b) { return a -= b; }
    friend pi_expr operator*(pi_expr a, const pi_expr& b) { return a *= b; }

    bool operator==(const pi_expr& o) const { return terms_ == o.terms_; }
    bool operator!=(const pi_expr& o) const { return terms_ != o.terms_; }

    // Enclosure of the exact real value given an enclosure of pi.
    rational_interval evaluate(const rational_interval& pi_iv) const;
    interval evaluate_d(const interval& pi_iv) const;
    interval evaluate_d() const { return evaluate_d(pi_interval()); }

    // Exact sign: structural zero test first, then interval evaluation with
    // escalating pi precision. Terminates because a nonzero Laurent polynomial
    // in pi with rational coefficients cannot vanish (pi is transcendental).
    int sign() const;

    // Terms by descending pi exponent, rationals as p/q, e.g. "2*pi^-1 - 1/3".
    std::string to_string() const;

private:
    void insert_term(int exponent, const rational& c);
    std::map<int, rational> terms_;
};

inline pi_expr operator*(const rational& c, const pi_expr& e) { return pi_expr(c) * e; }

}  // namespace trigcert
