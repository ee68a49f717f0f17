#include "trigcert/series.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace trigcert {

namespace {

// B_n by the defining recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0, B_0 = 1.
const rational& bernoulli_signed(unsigned n) {
    static std::vector<rational> cache{rational(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        const unsigned m = static_cast<unsigned>(cache.size());
        rational acc = 0;
        for (unsigned j = 0; j < m; ++j) acc += binomial(m + 1, j) * cache[j];
        cache.push_back(-acc / rational(m + 1));
    }
    return cache[n];
}

}  // namespace

rational bernoulli_abs(unsigned k) {
    if (k == 0) throw std::invalid_argument("bernoulli_abs: k must be >= 1");
    const rational& b = bernoulli_signed(2 * k);
    return b < 0 ? rational(-b) : b;
}

rational sinc_coeff(unsigned k) {
    rational c = rational(1) / factorial(2 * k + 1);
    return (k % 2 == 0) ? c : -c;
}

rational tan_coeff(unsigned k) {
    if (k == 0) return rational(0);
    const rational p = rational(int_pow(integer(2), 2 * k));
    return p * (p - 1) * bernoulli_abs(k) / factorial(2 * k);
}

rational cot_coeff(unsigned k) {
    if (k == 0) throw std::invalid_argument("cot_coeff: k must be >= 1");
    return rational(int_pow(integer(2), 2 * k)) * bernoulli_abs(k) / factorial(2 * k);
}

pi_expr steckin_alpha(unsigned k) {
    if (k == 0) throw std::invalid_argument("steckin_alpha: k must be >= 1");
    const pi_expr geo(-rational(int_pow(integer(2), k + 1)), -static_cast<int>(k + 1));
    if (k % 2 == 0) return geo;
    return pi_expr(tan_coeff((k + 1) / 2)) + geo;
}

pi_expr becker_stark_C(unsigned k) {
    if (k == 0) throw std::invalid_argument("becker_stark_C: k must be >= 1");
    return pi_expr(tan_coeff(k), 2) - pi_expr(rational(4) * tan_coeff(k - 1));
}

namespace {

// a_1 = 1, a_{2j} = 0, a_{2j+1} = -cot_coeff(j); indices < 1 give 0.
pi_expr cot_array(int idx) {
    if (idx < 1) return pi_expr();
    if (idx == 1) return pi_expr(rational(1));
    if (idx % 2 == 0) return pi_expr();
    return pi_expr(-cot_coeff(static_cast<unsigned>((idx - 1) / 2)));
}

// Coefficient of t^n (n >= -1) in (sum_i (2t/pi)^i) * (sum_j a_{2j+1} t^(2j-1)),
// the geometric factor times the cot series written with the array above.
pi_expr geo_cot_product_coeff(int n) {
    pi_expr acc;
    for (int j = 0; 2 * j - 1 <= n; ++j) {
        const int geo_power = n - (2 * j - 1);
        // (2/pi)^geo_power * a_{2j+1}
        pi_expr geo(rational(int_pow(integer(2), static_cast<unsigned>(geo_power))), -geo_power);
        acc += geo * cot_array(2 * j + 1);
    }
    return acc;
}

}  // namespace

pi_expr psi_coeff_product(unsigned m) {
    // (8/pi) t (pi - t) * H(t) = 8 t H - (8/pi) t^2 H, so the t^m coefficient
    // is 8 h_{m-1} - (8/pi) h_{m-2} with h_n the product coefficient above.
    pi_expr result = pi_expr(rational(8)) * geo_cot_product_coeff(static_cast<int>(m) - 1);
    result -= pi_expr(rational(8), -1) * geo_cot_product_coeff(static_cast<int>(m) - 2);
    return result;
}

pi_expr psi_coeff_conjecture(unsigned m) {
    const int r = static_cast<int>(m % 2);
    pi_expr acc = pi_expr(rational(8), -r) * cot_array(static_cast<int>(m) + 1 - r);
    for (int i = 1; i <= static_cast<int>(m) / 2; ++i) {
        const unsigned pow2 = static_cast<unsigned>(2 * i + 2 + r);
        pi_expr factor(rational(int_pow(integer(2), pow2)), -(2 * i + r));
        acc += factor * cot_array(static_cast<int>(m) + 1 - 2 * i - r);
    }
    return acc;
}

std::optional<series_id> parse_series_id(const std::string& name) {
    if (name == "sinc") return series_id::sinc;
    if (name == "tan") return series_id::tan;
    if (name == "cot") return series_id::cot;
    if (name == "steckin_alpha" || name == "alpha") return series_id::steckin_alpha;
    if (name == "becker_stark_C" || name == "C") return series_id::becker_stark_C;
    if (name == "psi" || name == "psi_product") return series_id::psi_product;
    if (name == "psi_conjecture") return series_id::psi_conjecture;
    return std::nullopt;
}

std::string series_id_name(series_id id) {
    switch (id) {
        case series_id::sinc: return "sinc";
        case series_id::tan: return "tan";
        case series_id::cot: return "cot";
        case series_id::steckin_alpha: return "steckin_alpha";
        case series_id::becker_stark_C: return "becker_stark_C";
        case series_id::psi_product: return "psi_product";
        case series_id::psi_conjecture: return "psi_conjecture";
    }
    return "?";
}

unsigned series_min_index(series_id id) {
    switch (id) {
        case series_id::sinc:
        case series_id::psi_product:
        case series_id::psi_conjecture: return 0;
        default: return 1;
    }
}

int series_power(series_id id, unsigned k) {
    switch (id) {
        case series_id::sinc: return static_cast<int>(2 * k);
        case series_id::tan:
        case series_id::cot: return static_cast<int>(2 * k) - 1;
        case series_id::steckin_alpha: return static_cast<int>(k);
        case series_id::becker_stark_C: return static_cast<int>(2 * k) - 2;
        case series_id::psi_product:
        case series_id::psi_conjecture: return static_cast<int>(k);
    }
    return 0;
}

namespace {

pi_expr compute_coeff(series_id id, unsigned k) {
    switch (id) {
        case series_id::sinc: return pi_expr(sinc_coeff(k));
        case series_id::tan: return pi_expr(tan_coeff(k));
        case series_id::cot: return pi_expr(cot_coeff(k));
        case series_id::steckin_alpha: return steckin_alpha(k);
        case series_id::becker_stark_C: return becker_stark_C(k);
        case series_id::psi_product: return psi_coeff_product(k);
        case series_id::psi_conjecture: return psi_coeff_conjecture(k);
    }
    throw std::logic_error("coeff_stream: unknown series");
}

}  // namespace

pi_expr coeff_stream::coeff(unsigned k) const {
    static std::mutex mtx;
    static std::vector<std::vector<std::optional<pi_expr>>> cache(7);
    const auto idx = static_cast<size_t>(id_);
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (idx < cache.size() && k < cache[idx].size() && cache[idx][k]) return *cache[idx][k];
    }
    pi_expr value = compute_coeff(id_, k);
    std::lock_guard<std::mutex> lock(mtx);
    if (k >= cache[idx].size()) cache[idx].resize(k + 1);
    cache[idx][k] = value;
    return value;
}

}  // namespace trigcert
