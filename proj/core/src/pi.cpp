#include "trigcert/pi.hpp"

#include <map>
#include <mutex>

namespace trigcert {

namespace {

// Sum of arctan(1/inv) * scale as an integer, alternating series
// arctan(1/v) = sum_j (-1)^j / ((2j+1) v^(2j+1)).
// Each term is floor-divided, so each computed term is below the true term by
// less than 1; the alternating truncation error is below the first omitted
// term, which is below 1 once the loop exits. Returns the number of terms via
// out-parameter so the caller can bound the accumulated error.
integer scaled_arctan_inv(const integer& scale, unsigned inv, unsigned& terms_out) {
    integer sum = 0;
    integer v_pow = inv;  // inv^(2j+1)
    const integer inv_sq = integer(inv) * inv;
    unsigned j = 0;
    for (;;) {
        integer denom = v_pow * (2 * j + 1);
        integer term = scale / denom;
        if (term == 0) break;
        if (j % 2 == 0) sum += term;
        else sum -= term;
        v_pow *= inv_sq;
        ++j;
    }
    terms_out = j;
    return sum;
}

}  // namespace

rational_interval pi_enclosure_rational(unsigned bits) {
    static std::map<unsigned, rational_interval> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(bits);
        if (it != cache.end()) return it->second;
    }

    const unsigned guard = 24;
    const integer scale = int_pow(integer(2), bits + guard);
    unsigned n5 = 0, n239 = 0;
    const integer a5 = scaled_arctan_inv(scale, 5, n5);
    const integer a239 = scaled_arctan_inv(scale, 239, n239);
    const integer approx = 16 * a5 - 4 * a239;
    // Error budget in scale units: each floor-divided term loses < 1, plus < 1
    // truncation per series, all magnified by the outer 16 and 4 factors.
    const integer err = 16 * integer(n5 + 1) + 4 * integer(n239 + 1);
    const rational denom(scale);
    rational_interval result(rational(approx - err) / denom, rational(approx + err) / denom);

    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(bits, result);
    return result;
}

const interval& pi_interval() {
    static const interval iv = [] {
        const rational_interval r = pi_enclosure_rational(64);
        return interval(to_double_down(r.lo), to_double_up(r.hi));
    }();
    return iv;
}

const interval& half_pi_interval() {
    static const interval iv(pi_interval().lo / 2, pi_interval().hi / 2);
    return iv;
}

}  // namespace trigcert
