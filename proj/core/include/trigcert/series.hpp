#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigcert/pi_expr.hpp"
#include "trigcert/rational.hpp"

namespace trigcert {

// |B_{2k}| for k >= 1, exact (defining recurrence, memoized, thread-safe).
rational bernoulli_abs(unsigned k);

// Coefficient of x^(2k) in sin x / x: (-1)^k / (2k+1)!.
rational sinc_coeff(unsigned k);

// Coefficient of x^(2k-1) in tan x: 2^(2k) (2^(2k)-1) |B_{2k}| / (2k)!, k >= 1.
// tan_coeff(0) is defined as 0.
rational tan_coeff(unsigned k);

// Positive magnitude of the x^(2k-1) term subtracted in
// cot x = 1/x - sum_k 2^(2k) |B_{2k}| / (2k)! x^(2k-1), k >= 1.
rational cot_coeff(unsigned k);

// Coefficient of x^k in tan x - (4/pi) x/(pi-2x):
// even k: -2^(k+1)/pi^(k+1); odd k: tan_coeff((k+1)/2) - 2^(k+1)/pi^(k+1).
pi_expr steckin_alpha(unsigned k);

// Coefficient of x^(2k-2) in (pi^2-4x^2) tan x / x:
// pi^2 * tan_coeff(k) - 4 * tan_coeff(k-1), k >= 1.
pi_expr becker_stark_C(unsigned k);

// Coefficient of t^m in 8t(pi-t)cot t/(pi-2t), by exact Cauchy product of
// (8/pi) t (pi - t), the geometric series sum_i (2t/pi)^i, and the cot series.
pi_expr psi_coeff_product(unsigned m);

// The same coefficient from the closed form
// 8 a_{m+1-r} / pi^r + sum_{i=1}^{floor(m/2)} 2^(2i+2+r) a_{m+1-2i-r} / pi^(2i+r),
// where r is m mod 2 and the array a has a_1 = 1, a_{2j} = 0,
// a_{2j+1} = -cot_coeff(j); indices below 1 contribute 0.
pi_expr psi_coeff_conjecture(unsigned m);

enum class series_id {
    sinc,
    tan,
    cot,
    steckin_alpha,
    becker_stark_C,
    psi_product,
    psi_conjecture,
};

std::optional<series_id> parse_series_id(const std::string& name);
std::string series_id_name(series_id id);

// Smallest valid index for the series (0 for sinc/psi, 1 for the others).
unsigned series_min_index(series_id id);

// Power of the variable that index k addresses in each expansion.
int series_power(series_id id, unsigned k);

// Memoized, replayable view over one coefficient sequence.
class coeff_stream {
public:
    explicit coeff_stream(series_id id) : id_(id) {}

    series_id id() const { return id_; }
    pi_expr coeff(unsigned k) const;

private:
    series_id id_;
};

}  // namespace trigcert
