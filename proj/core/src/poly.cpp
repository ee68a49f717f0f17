#include "trigcert/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace trigcert {

pi_poly::pi_poly(pi_expr constant) : coeffs_{std::move(constant)} { trim(); }

pi_poly::pi_poly(std::vector<pi_expr> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

pi_poly pi_poly::monomial(pi_expr c, unsigned power) {
    std::vector<pi_expr> cs(power + 1);
    cs[power] = std::move(c);
    return pi_poly(std::move(cs));
}

void pi_poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int pi_poly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

bool pi_poly::is_zero() const { return coeffs_.empty(); }

pi_expr pi_poly::coeff(unsigned k) const {
    if (k >= coeffs_.size()) return pi_expr();
    return coeffs_[k];
}

unsigned pi_poly::low_order() const {
    for (unsigned k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) return k;
    }
    return 0;
}

pi_poly& pi_poly::operator+=(const pi_poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

pi_poly& pi_poly::operator-=(const pi_poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

pi_poly pi_poly::operator-() const {
    pi_poly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

pi_poly operator*(const pi_poly& a, const pi_poly& b) {
    if (a.is_zero() || b.is_zero()) return pi_poly();
    pi_poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, pi_expr());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

pi_poly operator*(const pi_expr& c, const pi_poly& p) {
    pi_poly r;
    r.coeffs_.reserve(p.coeffs_.size());
    for (const auto& pc : p.coeffs_) r.coeffs_.push_back(c * pc);
    r.trim();
    return r;
}

pi_poly pi_poly::derivative() const {
    if (coeffs_.size() <= 1) return pi_poly();
    pi_poly r;
    r.coeffs_.reserve(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) {
        r.coeffs_.push_back(pi_expr(rational(static_cast<long long>(k))) * coeffs_[k]);
    }
    r.trim();
    return r;
}

pi_expr pi_poly::evaluate(const pi_expr& v) const {
    pi_expr acc;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * v + coeffs_[k];
    }
    return acc;
}

rational_interval pi_poly::evaluate(const rational_interval& v, const rational_interval& pi_iv) const {
    rational_interval acc(rational(0));
    for (size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * v + coeffs_[k].evaluate(pi_iv);
    }
    return acc;
}

interval pi_poly::evaluate_d(const interval& v) const {
    interval acc(0.0);
    for (size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * v + coeffs_[k].evaluate_d();
    }
    return acc;
}

std::vector<interval> pi_poly::coeff_intervals() const {
    std::vector<interval> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.push_back(c.evaluate_d());
    return r;
}

pi_poly pi_poly::compose_affine(const pi_expr& c0, const pi_expr& c1) const {
    const pi_poly lin(std::vector<pi_expr>{c0, c1});
    pi_poly acc;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * lin + pi_poly(coeffs_[k]);
    }
    return acc;
}

std::optional<pi_poly> pi_poly::strip_low_order(unsigned k) const {
    if (k == 0) return *this;
    if (coeffs_.size() < k) {
        if (is_zero()) return pi_poly();
        return std::nullopt;
    }
    for (unsigned i = 0; i < k; ++i) {
        if (!coeffs_[i].is_zero()) return std::nullopt;
    }
    pi_poly r;
    r.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
    return r;
}

std::optional<pi_poly> pi_poly::deflate(const pi_expr& root) const {
    if (is_zero()) return std::nullopt;
    const int deg = degree();
    if (deg == 0) return std::nullopt;
    std::vector<pi_expr> q(static_cast<size_t>(deg));
    pi_expr carry = coeffs_[static_cast<size_t>(deg)];
    for (int k = deg - 1; k >= 0; --k) {
        q[static_cast<size_t>(k)] = carry;
        carry = coeffs_[static_cast<size_t>(k)] + root * carry;
    }
    if (!carry.is_zero()) return std::nullopt;
    return pi_poly(std::move(q));
}

std::string pi_poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k].to_string() << ")";
        if (k == 1) {
            os << "*" << var;
        } else if (k > 1) {
            os << "*" << var << "^" << k;
        }
    }
    return os.str();
}

interval bound_poly::evaluate_d(const interval& v) const {
    interval r = poly.evaluate_d(v);
    if (has_principal()) {
        r = r + principal_coeff.evaluate_d() / v;
    }
    return r;
}

rational_interval bound_poly::evaluate(const rational_interval& v, const rational_interval& pi_iv) const {
    rational_interval r = poly.evaluate(v, pi_iv);
    if (has_principal()) {
        r = r + principal_coeff.evaluate(pi_iv) / v;
    }
    return r;
}

}  // namespace trigcert
