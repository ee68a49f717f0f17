#pragma once

#include <string>

#include "trigcert/pi_expr.hpp"
#include "trigcert/prover.hpp"

namespace trigcert {

struct parsed_claim {
    claim_term lhs;
    claim_term rhs;
    pi_expr lo;
    pi_expr hi;
    std::string display;  // normalized rendering of the claim
};

// Parses "<expr> '<' <expr> on (<a>, <b>)".
//
// Each side is either the name of a certified evaluator (sinc, tan, cot,
// steckin_f, steckin_g, psi, phi, with f and g accepted as shorthand), the
// name of a catalogued polynomial bound (Q1, T2L(f), ...), or an inline
// arithmetic expression over rationals, decimals, pi, and a single variable
// letter (x or t) using + - * / ^ and parentheses. Division is restricted to
// denominators that reduce to a rational multiple of a power of pi. The two
// domain endpoints must be constant expressions.
//
// Throws std::invalid_argument with a descriptive message on malformed input.
parsed_claim parse_claim(const std::string& text);

// Parses a single side using the same rules as parse_claim.
claim_term parse_term(const std::string& text);

}  // namespace trigcert
