#pragma once

#include <optional>
#include <string>

#include "trigcert/interval.hpp"
#include "trigcert/rational_interval.hpp"

namespace trigcert {

// Functions the certification engine can evaluate with guaranteed enclosures.
enum class function_id {
    sinc,
    tan,
    cot,
    steckin_f,  // tan x - (4/pi) x/(pi - 2x), in x on (0, pi/2)
    steckin_g,  // cot t - 1/t + 2/pi, in t on (0, pi/2); equals steckin_f at x = pi/2 - t
    psi,        // 8(pi - t) cos t / ((pi - 2t) sinc t), in t on (0, pi/2)
    phi,        // (pi^2 - 4x^2) sinc x / cos x, in x on (0, pi/2); equals psi at t = pi/2 - x
};

std::optional<function_id> parse_function_id(const std::string& name);
std::string function_id_name(function_id fn);

// Double-precision enclosures (outward rounded). Throw std::domain_error when
// the input leaves the region where the method is valid.
interval enclose_sin(const interval& v);   // 0 <= v <= 1.6
interval enclose_cos(const interval& v);   // 0 <= v <= 1.6
interval enclose_sinc(const interval& v);  // 0 <= v <= 3.461
interval enclose(function_id fn, const interval& v);

// Arbitrary-precision enclosures over exact rational intervals. `bits` sets the
// target resolution (series tails and the pi enclosure are pushed below about
// 2^-bits).
rational_interval rat_sin(const rational_interval& v, unsigned bits);   // 0 <= v <= 8/5
rational_interval rat_cos(const rational_interval& v, unsigned bits);   // 0 <= v <= 8/5
rational_interval rat_sinc(const rational_interval& v, unsigned bits);  // 0 <= v <= 3461/1000
rational_interval rat_enclose(function_id fn, const rational_interval& v, unsigned bits);

}  // namespace trigcert
