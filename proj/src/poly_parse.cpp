#include <cctype>
#include <string>

#include "enlab/poly.hpp"

namespace enlab {

namespace {

// Recursive-descent parser over the polynomial grammar. Intermediate values
// carry the full max_vars width; the result is truncated to the highest
// variable actually mentioned (or the min_vars override).
class PolyParser {
public:
    PolyParser(std::string_view text, const ParseLimits& limits)
        : text_(text), limits_(limits) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        skip_ws();
        if (peek() == '=') {
            ++pos_;
            skip_ws();
            if (peek() != '0') fail("expected '0' after '='");
            ++pos_;
            skip_ws();
        }
        if (pos_ != text_.size()) fail("unexpected trailing input");
        int n = std::max(limits_.min_vars, max_mentioned_);
        return truncate(p, n);
    }

private:
    std::string_view text_;
    const ParseLimits& limits_;
    std::size_t pos_ = 0;
    int max_mentioned_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial syntax error at offset " + std::to_string(pos_) + ": " + msg,
                         pos_);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    i64 parse_uint(const char* what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        i64 v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            int d = peek() - '0';
            if (mul_overflows(v, 10, v) || add_overflows(v, d, v))
                fail("integer literal exceeds 64-bit signed range");
            ++pos_;
        }
        return v;
    }

    void check_degree(const Polynomial& p) {
        if (p.total_degree() > limits_.max_degree)
            fail("term degree exceeds cap " + std::to_string(limits_.max_degree) +
                 " (raise with --max-degree)");
    }

    Polynomial parse_primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == 'x') {
            ++pos_;
            i64 idx = parse_uint("variable index");
            if (idx < 1) fail("variable index must be positive");
            if (idx > limits_.max_vars)
                fail("variable index exceeds cap " + std::to_string(limits_.max_vars) +
                     " (raise with --max-vars)");
            max_mentioned_ = std::max(max_mentioned_, static_cast<int>(idx));
            return Polynomial::variable(static_cast<int>(idx), limits_.max_vars);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            i64 v = parse_uint("integer");
            return Polynomial::constant(v, limits_.max_vars);
        }
        fail("expected integer, variable or '('");
    }

    Polynomial parse_factor() {
        Polynomial p = parse_primary();
        for (;;) {
            skip_ws();
            if (peek() != '^') break;
            ++pos_;
            i64 e = parse_uint("exponent");
            if (e > limits_.max_degree)
                fail("exponent exceeds degree cap " + std::to_string(limits_.max_degree));
            p = p.pow(static_cast<std::uint32_t>(e));
            check_degree(p);
        }
        return p;
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            p = p * parse_factor();
            check_degree(p);
        }
        return p;
    }

    Polynomial parse_expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++pos_;
        }
        Polynomial acc = parse_term();
        if (neg) acc = acc.negated();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial t = parse_term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    static Polynomial truncate(const Polynomial& p, int n) {
        Polynomial r(n);
        for (const auto& [e, c] : p.terms()) {
            ExpVec w(e.begin(), e.begin() + n);
            r.add_term(w, c);
        }
        return r;
    }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const ParseLimits& limits) {
    if (limits.min_vars > limits.max_vars)
        throw_usage("min_vars override exceeds max_vars cap");
    return PolyParser(text, limits).run();
}

} // namespace enlab
