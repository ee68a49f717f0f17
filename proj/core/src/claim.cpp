#include "trigcert/claim.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <vector>

#include "trigcert/catalog.hpp"
#include "trigcert/enclosure.hpp"
#include "trigcert/rational.hpp"

namespace trigcert {

namespace {

struct token {
    enum kind_t { number, ident, sym, end } kind = end;
    std::string text;
    size_t pos = 0;
};

[[noreturn]] void fail(const std::string& what, size_t pos) {
    throw std::invalid_argument(what + " at position " + std::to_string(pos));
}

std::vector<token> tokenize(const std::string& text) {
    std::vector<token> out;
    size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            bool dot = false;
            while (j < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[j])) ||
                    (!dot && text[j] == '.'))) {
                if (text[j] == '.') dot = true;
                ++j;
            }
            out.push_back({token::number, text.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_')) {
                ++j;
            }
            out.push_back({token::ident, text.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::string("+-*/^(),<").find(c) != std::string::npos) {
            out.push_back({token::sym, std::string(1, c), i});
            ++i;
            continue;
        }
        fail(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({token::end, "", text.size()});
    return out;
}

rational rational_from_number(const std::string& text, size_t pos) {
    const size_t dot = text.find('.');
    if (dot == std::string::npos) return rational(integer(text));
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty()) fail("digits must follow the decimal point", pos);
    integer num(whole + frac);
    return rational(num, int_pow(integer(10), static_cast<unsigned>(frac.size())));
}

// value of an arithmetic subexpression: a polynomial in at most one variable
struct poly_value {
    pi_poly poly;
    char var = 0;  // 0 until a variable letter appears
};

char merge_var(char a, char b, size_t pos) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    fail("expression mixes the variables x and t", pos);
}

class expr_parser {
  public:
    expr_parser(const std::vector<token>& tokens, size_t first, size_t last)
        : tokens_(tokens), at_(first), last_(last) {}

    poly_value parse_all() {
        poly_value v = parse_sum();
        if (at_ != last_) fail("unexpected trailing token '" + cur().text + "'", cur().pos);
        return v;
    }

  private:
    const token& cur() const { return tokens_[at_]; }
    bool is_sym(const char* s) const {
        return at_ < last_ && cur().kind == token::sym && cur().text == s;
    }

    poly_value parse_sum() {
        poly_value acc = parse_product();
        while (is_sym("+") || is_sym("-")) {
            const bool minus = cur().text == "-";
            const size_t pos = cur().pos;
            ++at_;
            poly_value rhs = parse_product();
            acc.var = merge_var(acc.var, rhs.var, pos);
            if (minus) {
                acc.poly -= rhs.poly;
            } else {
                acc.poly += rhs.poly;
            }
        }
        return acc;
    }

    poly_value parse_product() {
        poly_value acc = parse_power();
        while (is_sym("*") || is_sym("/")) {
            const bool divide = cur().text == "/";
            const size_t pos = cur().pos;
            ++at_;
            poly_value rhs = parse_power();
            acc.var = merge_var(acc.var, rhs.var, pos);
            if (!divide) {
                acc.poly = acc.poly * rhs.poly;
                continue;
            }
            if (rhs.poly.degree() > 0) {
                fail("division by an expression containing the variable", pos);
            }
            const pi_expr denom = rhs.poly.coeff(0);
            const auto& terms = denom.terms();
            if (terms.size() != 1) {
                fail("the denominator must reduce to a rational multiple of a power of pi", pos);
            }
            const auto& [exp, q] = *terms.begin();
            acc.poly = pi_expr(rational(1) / q, -exp) * acc.poly;
        }
        return acc;
    }

    poly_value parse_power() {
        poly_value base = parse_unary();
        if (!is_sym("^")) return base;
        const size_t pos = cur().pos;
        ++at_;
        bool negative = false;
        if (is_sym("-")) {
            negative = true;
            ++at_;
        }
        if (at_ >= last_ || cur().kind != token::number ||
            cur().text.find('.') != std::string::npos) {
            fail("the exponent must be an integer", pos);
        }
        const unsigned long e = std::stoul(cur().text);
        ++at_;
        if (e > 64) fail("exponent too large", pos);
        if (negative) {
            if (base.var != 0 || base.poly.degree() > 0) {
                fail("negative exponents apply only to constants", pos);
            }
            const auto& terms = base.poly.coeff(0).terms();
            if (terms.size() != 1) {
                fail("negative exponents apply only to rational multiples of powers of pi", pos);
            }
            const auto& [pexp, q] = *terms.begin();
            pi_expr inv(rational(1) / q, -pexp);
            pi_expr acc(rational(1));
            for (unsigned long i = 0; i < e; ++i) acc *= inv;
            return {pi_poly(acc), base.var};
        }
        pi_poly acc(pi_expr(rational(1)));
        for (unsigned long i = 0; i < e; ++i) acc = acc * base.poly;
        return {acc, base.var};
    }

    poly_value parse_unary() {
        if (is_sym("-")) {
            ++at_;
            poly_value v = parse_unary();
            v.poly = -v.poly;
            return v;
        }
        if (is_sym("+")) {
            ++at_;
            return parse_unary();
        }
        return parse_primary();
    }

    poly_value parse_primary() {
        if (at_ >= last_) fail("expression ends unexpectedly", cur().pos);
        if (is_sym("(")) {
            ++at_;
            poly_value v = parse_sum();
            if (!is_sym(")")) fail("expected ')'", cur().pos);
            ++at_;
            return v;
        }
        const token t = cur();
        if (t.kind == token::number) {
            ++at_;
            return {pi_poly(pi_expr(rational_from_number(t.text, t.pos))), 0};
        }
        if (t.kind == token::ident) {
            ++at_;
            if (t.text == "pi") return {pi_poly(pi_expr::pi()), 0};
            if (t.text == "x" || t.text == "t") {
                return {pi_poly::monomial(pi_expr(1), 1), t.text[0]};
            }
            fail("unknown identifier '" + t.text +
                     "' (certified evaluators and named bounds stand alone on a side)",
                 t.pos);
        }
        fail("unexpected token '" + t.text + "'", t.pos);
    }

    const std::vector<token>& tokens_;
    size_t at_;
    size_t last_;
};

std::string join_tokens(const std::vector<token>& tokens, size_t first, size_t last) {
    std::string out;
    for (size_t i = first; i < last; ++i) out += tokens[i].text;
    return out;
}

std::optional<function_id> side_function(const std::vector<token>& tokens, size_t first,
                                         size_t last) {
    if (last - first != 1 || tokens[first].kind != token::ident) return std::nullopt;
    const std::string& name = tokens[first].text;
    if (name == "f") return function_id::steckin_f;
    if (name == "g") return function_id::steckin_g;
    return parse_function_id(name);
}

struct parsed_side {
    claim_term term;
    std::string display;
    char var = 0;
};

parsed_side parse_side(const std::vector<token>& tokens, size_t first, size_t last) {
    if (first >= last) fail("empty expression", tokens[first].pos);
    if (auto fn = side_function(tokens, first, last)) {
        return {claim_term::make_function(*fn), function_id_name(*fn), 0};
    }
    const std::string glued = join_tokens(tokens, first, last);
    if (auto named = lookup_bound(glued)) {
        return {claim_term::make_polynomial(*named), named->name,
                named->var == bound_var::t ? 't' : 'x'};
    }
    expr_parser parser(tokens, first, last);
    const poly_value value = parser.parse_all();
    bound_poly bp;
    bp.var = value.var == 't' ? bound_var::t : bound_var::x;
    bp.poly = value.poly;
    bp.name = value.poly.to_string(std::string(1, value.var == 0 ? 'x' : value.var));
    return {claim_term::make_polynomial(bp), bp.name, value.var};
}

pi_expr parse_constant(const std::vector<token>& tokens, size_t first, size_t last,
                       const char* what) {
    expr_parser parser(tokens, first, last);
    const poly_value value = parser.parse_all();
    if (value.var != 0 || value.poly.degree() > 0) {
        fail(std::string(what) + " must be a constant", tokens[first].pos);
    }
    return value.poly.coeff(0);
}

}  // namespace

claim_term parse_term(const std::string& text) {
    const std::vector<token> tokens = tokenize(text);
    return parse_side(tokens, 0, tokens.size() - 1).term;
}

parsed_claim parse_claim(const std::string& text) {
    const std::vector<token> tokens = tokenize(text);
    const size_t n = tokens.size() - 1;  // excludes the end marker

    size_t less_at = n;
    for (size_t i = 0; i < n; ++i) {
        if (tokens[i].kind == token::sym && tokens[i].text == "<") {
            if (less_at != n) fail("more than one '<'", tokens[i].pos);
            less_at = i;
        }
    }
    if (less_at == n) fail("expected '<' between the two sides", tokens[n].pos);

    size_t on_at = n;
    int depth = 0;
    for (size_t i = less_at + 1; i < n; ++i) {
        if (tokens[i].kind == token::sym && tokens[i].text == "(") ++depth;
        if (tokens[i].kind == token::sym && tokens[i].text == ")") --depth;
        if (depth == 0 && tokens[i].kind == token::ident && tokens[i].text == "on") {
            on_at = i;
            break;
        }
    }
    if (on_at == n) fail("expected 'on (a, b)' after the comparison", tokens[n].pos);

    parsed_side lhs = parse_side(tokens, 0, less_at);
    parsed_side rhs = parse_side(tokens, less_at + 1, on_at);
    if (lhs.var != 0 && rhs.var != 0 && lhs.var != rhs.var) {
        fail("the two sides use different variables", tokens[less_at].pos);
    }

    size_t i = on_at + 1;
    if (i >= n || !(tokens[i].kind == token::sym && tokens[i].text == "(")) {
        fail("expected '(' after 'on'", tokens[i < n ? i : n].pos);
    }
    ++i;
    size_t comma = n;
    depth = 0;
    for (size_t j = i; j < n; ++j) {
        if (tokens[j].kind == token::sym && tokens[j].text == "(") ++depth;
        if (tokens[j].kind == token::sym && tokens[j].text == ")") --depth;
        if (depth == 0 && tokens[j].kind == token::sym && tokens[j].text == ",") {
            comma = j;
            break;
        }
    }
    if (comma == n) fail("expected ',' between the domain endpoints", tokens[i].pos);
    size_t close = n;
    depth = 0;
    for (size_t j = comma + 1; j < n; ++j) {
        if (tokens[j].kind == token::sym && tokens[j].text == "(") ++depth;
        if (tokens[j].kind == token::sym && tokens[j].text == ")") {
            if (depth == 0) {
                close = j;
                break;
            }
            --depth;
        }
    }
    if (close == n) fail("expected ')' closing the domain", tokens[comma].pos);
    if (close + 1 != n) fail("unexpected trailing input", tokens[close + 1].pos);

    parsed_claim out;
    out.lo = parse_constant(tokens, i, comma, "the lower endpoint");
    out.hi = parse_constant(tokens, comma + 1, close, "the upper endpoint");
    out.lhs = lhs.term;
    out.rhs = rhs.term;
    out.display =
        lhs.display + " < " + rhs.display + " on (" + out.lo.to_string() + ", " + out.hi.to_string() + ")";
    return out;
}

}  // namespace trigcert
