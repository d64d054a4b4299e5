#pragma once

#include <cctype>
#include <string>

#include "derivlab/polynomial.hpp"

namespace derivlab {

// Expression grammar (whitespace insignificant, '*' required for products):
//   expr     := term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := base ("^" nat)?
//   base     := rational | varname | "(" expr ")"
//   rational := ["-"] nat ("/" nat)?

namespace detail {

template <class F>
class PolyParser {
public:
    PolyParser(const std::string& text, RingPtr<F> ring)
        : text_(text), ring_(std::move(ring)) {}

    Polynomial<F> parse() {
        Polynomial<F> p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial<F> parse_expr() {
        Polynomial<F> acc = parse_term();
        while (true) {
            skip_ws();
            if (peek() == '+') { ++pos_; acc = acc + parse_term(); }
            else if (peek() == '-') { ++pos_; acc = acc - parse_term(); }
            else break;
        }
        return acc;
    }

    Polynomial<F> parse_term() {
        Polynomial<F> acc = parse_factor();
        while (true) {
            skip_ws();
            if (peek() == '*') { ++pos_; acc = acc * parse_factor(); }
            else break;
        }
        return acc;
    }

    Polynomial<F> parse_factor() {
        Polynomial<F> base = parse_base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            std::uint32_t e = parse_exponent();
            Polynomial<F> r = Polynomial<F>::one(ring_);
            for (std::uint32_t i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    Polynomial<F> parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial<F> inner = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_varname();
        fail(text_.empty() || pos_ >= text_.size() ? "unexpected end of input"
                                                   : "expected number, variable or '('");
        return Polynomial<F>::zero(ring_);  // unreachable
    }

    Polynomial<F> parse_rational() {
        bool negative = false;
        if (peek() == '-') { negative = true; ++pos_; skip_ws(); }
        std::string num = parse_nat();
        std::string den = "1";
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            den = parse_nat();
        }
        typename F::Elem v;
        try {
            v = ring_->field().from_fraction(negative, num, den);
        } catch (const std::domain_error& e) {
            fail(e.what());
        }
        return Polynomial<F>::constant(ring_, v);
    }

    Polynomial<F> parse_varname() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        auto idx = ring_->find_var(name);
        if (!idx) throw parse_error("unknown variable name '" + name + "'", start);
        return Polynomial<F>::variable(ring_, *idx);
    }

    std::string parse_nat() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected a number");
        return text_.substr(start, pos_ - start);
    }

    std::uint32_t parse_exponent() {
        std::size_t at = pos_;
        std::string digits = parse_nat();
        if (digits.size() > 9) throw parse_error("exponent too large", at);
        return static_cast<std::uint32_t>(std::stoul(digits));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    const std::string& text_;
    RingPtr<F> ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
Polynomial<F> parse_polynomial(const std::string& text, const RingPtr<F>& ring) {
    return detail::PolyParser<F>(text, ring).parse();
}

inline std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += "*";
        out += names.at(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

/// Canonical text form: terms in descending graded-lex order; output parses
/// back to the same polynomial.
template <class F>
std::string to_string(const Polynomial<F>& p) {
    if (p.is_zero()) return "0";
    const F& f = p.field();
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [mono, coeff] = *it;
        std::string cs = f.str(coeff);
        bool neg = !cs.empty() && cs[0] == '-';
        std::string abs = neg ? cs.substr(1) : cs;
        std::string ms = mono.is_one() ? "" : monomial_str(mono, p.ring()->var_names());
        std::string body;
        if (ms.empty()) body = abs;
        else if (abs == "1" && !(first && neg)) body = ms;
        else body = abs + "*" + ms;
        if (first) out += (neg ? "-" : "") + body;
        else out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

}  // namespace derivlab
