#pragma once

#include "trigcert/interval.hpp"
#include "trigcert/rational_interval.hpp"

namespace trigcert {

// Exact rational enclosure of pi with width <= 2^(1-bits), computed from
// 16*arctan(1/5) - 4*arctan(1/239) in scaled integer arithmetic with explicit
// truncation accounting. Results are cached per bit count.
rational_interval pi_enclosure_rational(unsigned bits);

// Tightest double enclosure of pi (1 ulp wide); cached.
const interval& pi_interval();

// pi/2 as a double enclosure (exact halving of pi_interval()).
const interval& half_pi_interval();

}  // namespace trigcert
