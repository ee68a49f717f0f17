#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "trigcert/enclosure.hpp"
#include "trigcert/pi_expr.hpp"
#include "trigcert/poly.hpp"

namespace trigcert {

enum class claim_status { verified, refuted, undecided };
std::string claim_status_name(claim_status s);

// One side of a pointwise comparison: either a function with certified
// enclosures, or a polynomial (optionally carrying a c/v singular term).
struct claim_term {
    enum class kind_t { function, polynomial };
    kind_t kind = kind_t::polynomial;
    function_id fn = function_id::sinc;
    bound_poly poly;

    static claim_term make_function(function_id f);
    static claim_term make_polynomial(bound_poly bp);
};

struct prove_options {
    int max_depth = 40;
    double min_width = 1e-12;
    unsigned precision_bits = 256;
};

struct witness_info {
    std::string point;
    std::string description;
};

// Certificate for one pointwise claim. `verified` and `refuted` are backed by
// outward-rounded or exact arithmetic throughout; `undecided` means the search
// budget ran out without a certificate either way.
struct bound_cert {
    claim_status status = claim_status::undecided;
    std::size_t leaf_count = 0;
    int max_depth_reached = 0;
    std::optional<witness_info> witness;
    std::string note;
};

// Order and sign of the first nonzero coefficient in the local expansion of
// rhs - lhs at `point` (direction +1 expands rightward, -1 leftward).
// nullopt when either side has no exact expansion there, or when the
// difference vanishes through order_cap.
struct expansion_gap {
    int order = 0;
    int sign = 0;
};
std::optional<expansion_gap> local_difference_order(const claim_term& lhs,
                                                    const claim_term& rhs,
                                                    const pi_expr& point, int direction,
                                                    int order_cap = 64);

// Prove lhs(v) < rhs(v) for every v in the open interval (lo, hi).
// Polynomial-only claims go through exact arithmetic; claims with a function
// side combine adaptive interval subdivision with exact endpoint expansions
// where the difference vanishes at a domain endpoint.
bound_cert prove_less(const claim_term& lhs, const claim_term& rhs, const pi_expr& lo,
                      const pi_expr& hi, const prove_options& opts = {});

// Prove p(v) > 0 for every v in the open interval (lo, hi) by exact
// arithmetic: shift to the left endpoint, strip the vanishing low order,
// deflate roots sitting exactly at the right endpoint, then certify the rest
// by rational interval subdivision with escalating precision. Refutations
// carry an exact witness point.
bound_cert prove_poly_positive(const pi_poly& p, const pi_expr& lo, const pi_expr& hi,
                               const prove_options& opts = {});

}  // namespace trigcert
