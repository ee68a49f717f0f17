#pragma once

#include <functional>
#include <optional>

#include "trigcert/enclosure.hpp"
#include "trigcert/pi_expr.hpp"
#include "trigcert/rational.hpp"

namespace trigcert {

// Exact local power expansion of a function at a domain endpoint:
//
//   fn(point + direction * u) = sum_{k >= min_index} coeff(k) * u^k
//
// for 0 < u < 1/(2 * majorant_r), together with the coefficient majorant
//
//   |coeff(k)| <= majorant_A * majorant_r^k   for every k >= 0.
//
// min_index == -1 marks a 1/u singular term (cot at 0); the majorant covers
// the regular part only. Each majorant holds with slack: the underlying
// coefficient formulas are bounded by zeta(2)-type estimates whose geometric
// ratio is strictly below majorant_r, so the inequality holds for all k, not
// just a checked prefix.
struct endpoint_stream {
    int min_index = 0;
    std::function<pi_expr(int)> coeff;
    rational majorant_A;
    rational majorant_r;
};

// Expansion of fn at `point` with u measured in `direction` (+1 expands to the
// right of the point, -1 to the left). Registered where the certification
// cases need them: at 0 for every function, and at pi/2 for the functions
// whose domain ends there. Returns nullopt for unregistered combinations.
std::optional<endpoint_stream> local_expansion(function_id fn, const pi_expr& point,
                                               int direction);

}  // namespace trigcert
