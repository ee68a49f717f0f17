#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigcert/interval.hpp"
#include "trigcert/pi_expr.hpp"
#include "trigcert/rational_interval.hpp"

namespace trigcert {

// Polynomial with pi_expr coefficients, stored densely by power.
class pi_poly {
public:
    pi_poly() = default;
    explicit pi_poly(pi_expr constant);
    explicit pi_poly(std::vector<pi_expr> coeffs);
    static pi_poly monomial(pi_expr c, unsigned power);

    // -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const;
    pi_expr coeff(unsigned k) const;
    const std::vector<pi_expr>& coeffs() const { return coeffs_; }

    // Index of the first structurally nonzero coefficient; 0 for the zero polynomial.
    unsigned low_order() const;

    pi_poly& operator+=(const pi_poly& o);
    pi_poly& operator-=(const pi_poly& o);
    pi_poly operator-() const;
    friend pi_poly operator+(pi_poly a, const pi_poly& b) { return a += b; }
    friend pi_poly operator-(pi_poly a, const pi_poly& b) { return a -= b; }
    friend pi_poly operator*(const pi_poly& a, const pi_poly& b);
    friend pi_poly operator*(const pi_expr& c, const pi_poly& p);
    bool operator==(const pi_poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const pi_poly& o) const { return !(*this == o); }

    pi_poly derivative() const;

    // Exact Horner evaluation at a pi_expr point.
    pi_expr evaluate(const pi_expr& v) const;
    // Certified evaluation: rational interval Horner with a pi enclosure.
    rational_interval evaluate(const rational_interval& v, const rational_interval& pi_iv) const;
    // Outward-rounded double interval Horner.
    interval evaluate_d(const interval& v) const;

    // Coefficients as double enclosures, for repeated interval Horner runs.
    std::vector<interval> coeff_intervals() const;

    // p(c0 + c1 * x), exact.
    pi_poly compose_affine(const pi_expr& c0, const pi_expr& c1) const;
    // Drop the leading x^k factor (requires the first k coefficients structurally zero).
    std::optional<pi_poly> strip_low_order(unsigned k) const;
    // Exact division by (x - root); nullopt when the remainder is structurally nonzero.
    std::optional<pi_poly> deflate(const pi_expr& root) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<pi_expr> coeffs_;
};

enum class bound_side { lower, upper };
enum class bound_var { x, t };

// A one-sided polynomial bound for a target function on a domain, possibly
// carrying a c/v singular term (principal_coeff / v + poly(v)).
struct bound_poly {
    std::string name;
    bound_side side = bound_side::lower;
    bound_var var = bound_var::x;
    pi_expr domain_lo;
    pi_expr domain_hi;
    pi_poly poly;
    pi_expr principal_coeff;

    bool has_principal() const { return !principal_coeff.is_zero(); }
    interval evaluate_d(const interval& v) const;
    rational_interval evaluate(const rational_interval& v, const rational_interval& pi_iv) const;
};

}  // namespace trigcert
