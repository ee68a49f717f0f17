#include "trigcert/pi_expr.hpp"

#include <sstream>
#include <stdexcept>

namespace trigcert {

pi_expr::pi_expr(const rational& constant) {
    insert_term(0, constant);
}

pi_expr::pi_expr(long long constant) {
    insert_term(0, rational(constant));
}

pi_expr::pi_expr(const rational& coeff, int pi_exponent) {
    insert_term(pi_exponent, coeff);
}

pi_expr pi_expr::pi(int exponent) {
    return pi_expr(rational(1), exponent);
}

bool pi_expr::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

rational pi_expr::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? rational(0) : it->second;
}

void pi_expr::insert_term(int exponent, const rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

pi_expr& pi_expr::operator+=(const pi_expr& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

pi_expr& pi_expr::operator-=(const pi_expr& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    return *this;
}

pi_expr& pi_expr::operator*=(const pi_expr& o) {
    std::map<int, rational> result;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            rational p = c1 * c2;
            if (p == 0) continue;
            auto [it, inserted] = result.emplace(e1 + e2, p);
            if (!inserted) {
                it->second += p;
                if (it->second == 0) result.erase(it);
            }
        }
    }
    terms_ = std::move(result);
    return *this;
}

pi_expr pi_expr::operator-() const {
    pi_expr r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

rational_interval pi_expr::evaluate(const rational_interval& pi_iv) const {
    rational_interval acc{rational(0)};
    for (const auto& [e, c] : terms_) {
        rational_interval term = ri_pow(pi_iv, e) * rational_interval(c);
        acc = acc + term;
    }
    return acc;
}

interval pi_expr::evaluate_d(const interval& pi_iv) const {
    interval acc(0.0);
    for (const auto& [e, c] : terms_) {
        acc = acc + iv_pow(pi_iv, e) * iv_from_rational(c);
    }
    return acc;
}

int pi_expr::sign() const {
    if (terms_.empty()) return 0;
    for (unsigned bits = 64; bits <= 65536; bits *= 2) {
        rational_interval v = evaluate(pi_enclosure_rational(bits));
        int s = v.sign();
        if (s != 0) return s;
    }
    throw std::logic_error("pi_expr::sign: precision cap reached without decision");
}

std::string pi_expr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending exponent
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        rational c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        const bool unit = (c == 1) && e != 0;
        if (!unit) os << rational_to_string(c);
        if (e != 0) {
            if (!unit) os << "*";
            os << "pi";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace trigcert
