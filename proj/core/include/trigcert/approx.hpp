#pragma once

#include "trigcert/poly.hpp"
#include "trigcert/series.hpp"

namespace trigcert {

// Sum of the series terms whose variable power is at most n. For cot this is
// the regular part only; the 1/v principal term is carried by the bound_poly.
pi_poly series_partial(series_id id, unsigned n);

// Truncation bound with the side implied by the signs of the omitted terms.
bound_poly taylor_bound(series_id id, unsigned n);

// Two-point lower bound for cot on (0, pi/2]: series data at 0 through degree
// n-1 plus a degree-n coefficient forced so the bound meets cot at pi/2.
// n must be odd.
bound_poly two_point_cot_lower(unsigned n);

// Remainder-series bounds in t = pi/2 - x for tan x - (4/pi) x/(pi - 2x),
// viewed as a function of t. upper: plain truncation; lower: the two-point
// cot bound with the singular parts cancelled.
bound_poly steckin_upper(unsigned n);
bound_poly steckin_lower(unsigned n);

// Certified rational lower bound for the coefficient that forces
// sum_{k<m1} C_k x^(2k-2) + gamma x^(2m1-2) to meet the ratio function at c.
rational forced_ratio_top(unsigned m1, const rational& c, unsigned bits);

// Ratio lower bound with the top coefficient forced at c (minus a small
// safety margin so the inequality stays strict at c).
bound_poly becker_stark_lower(unsigned m1, const rational& c);

}  // namespace trigcert
