#pragma once

#include <map>
#include <string>
#include <tuple>

#include "trigcert/interval.hpp"
#include "trigcert/pi_expr.hpp"
#include "trigcert/poly.hpp"
#include "trigcert/prover.hpp"

namespace trigcert {

// Finite sums  sum c * v^p * sin(v)^q * cos(v)^r  with exact coefficients.
class mixed_trig_expr {
  public:
    using key = std::tuple<unsigned, unsigned, unsigned>;  // (p, q, r)

    void add_term(unsigned p, unsigned q, unsigned r, const pi_expr& c);
    // adds scale * coeff_j * v^(j + p_shift) * sin^q * cos^r for every
    // monomial coeff_j v^j of the polynomial factor
    void add_poly_times(const pi_poly& poly, unsigned p_shift, unsigned q, unsigned r,
                        const pi_expr& scale);

    const std::map<key, pi_expr>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // the same expression written in s = pi/2 - v, with sin and cos exchanged
    mixed_trig_expr flipped_about_half_pi() const;

    // valid for 0 <= v <= 1.6
    interval evaluate_d(const interval& v) const;

    std::string to_string(char var = 'x') const;

  private:
    std::map<key, pi_expr> terms_;
};

// Certifies expr > 0 for every v in (0, pi/2), or refutes it with a certified
// witness. The polynomial envelopes used for sin and cos are sound only on
// (0, 4/5], so the domain is covered by that zone together with its mirror
// image about pi/2.
bound_cert prove_mixed_positive(const mixed_trig_expr& expr, const prove_options& opts = {});

}  // namespace trigcert
