#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "kmv/rationalfunc.hpp"

namespace kmv {

// Shared tokenizer / recursive-descent parser for the small expression
// language used by golden data files and tables: integers, named symbols,
// + - * / ^ and parentheses, plus generator atoms e[i,j], f[i,j], h[i]
// with an optional mode "(m)" and power "^p".

struct GenFactor {
    char kind = 'e'; // 'e', 'f', 'h'
    int i = 0;
    int j = 0; // unused for 'h'
    std::optional<int> mode;
    int power = 1;
};

struct ParsedTerm {
    MultiPoly coeff;
    std::vector<GenFactor> factors;
};

namespace detail {

struct Token {
    enum Kind { Int, Sym, Gen, Punct, End } kind = End;
    std::string text;   // Sym / Punct
    long long value = 0; // Int
    GenFactor gen;      // Gen (mode/power filled later)
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size() || s_[pos_] == '#') {
            tok_ = Token{};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            tok_ = Token{Token::Int, "", std::stoll(s_.substr(start, pos_ - start)), {}};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if ((name == "e" || name == "f" || name == "h") && pos_ < s_.size() &&
                s_[pos_] == '[') {
                tok_ = lex_gen(name[0]);
                return;
            }
            tok_ = Token{Token::Sym, name, 0, {}};
            return;
        }
        static const std::string punct = "+-*/^()[],";
        if (punct.find(c) != std::string::npos) {
            ++pos_;
            tok_ = Token{Token::Punct, std::string(1, c), 0, {}};
            return;
        }
        throw UsageError("parse: unexpected character '" + std::string(1, c) + "'");
    }

    Token lex_gen(char kind) {
        ++pos_; // '['
        GenFactor g;
        g.kind = kind;
        g.i = lex_int();
        if (kind != 'h') {
            expect(',');
            g.j = lex_int();
        }
        expect(']');
        Token t;
        t.kind = Token::Gen;
        t.gen = g;
        return t;
    }
    int lex_int() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw UsageError("parse: expected integer in generator");
        return std::stoi(s_.substr(start, pos_ - start));
    }
    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw UsageError(std::string("parse: expected '") + c + "' in generator");
        ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    Token tok_;
};

class ExprParser {
public:
    ExprParser(Lexer& lx, VarSetPtr vars) : lx_(lx), vars_(std::move(vars)) {}

    RationalFunc expr() {
        RationalFunc v = term();
        while (is_punct("+") || is_punct("-")) {
            std::string op = lx_.next().text;
            RationalFunc r = term();
            v = op == "+" ? v + r : v - r;
        }
        return v;
    }

private:
    RationalFunc term() {
        RationalFunc v = factor();
        while (is_punct("*") || is_punct("/")) {
            if (lx_.peek().text == "*") {
                // A '*' directly before a generator atom separates the
                // coefficient from the factor list; leave it unconsumed.
                Lexer probe = lx_;
                probe.next();
                if (probe.peek().kind == Token::Gen) break;
            }
            std::string op = lx_.next().text;
            RationalFunc r = factor();
            v = op == "*" ? v * r : v / r;
        }
        return v;
    }
    RationalFunc factor() {
        if (is_punct("-")) {
            lx_.next();
            return -factor();
        }
        if (is_punct("+")) {
            lx_.next();
            return factor();
        }
        RationalFunc v = primary();
        if (is_punct("^")) {
            lx_.next();
            Token t = lx_.next();
            bool neg = false;
            if (t.kind == Token::Punct && t.text == "-") {
                neg = true;
                t = lx_.next();
            }
            if (t.kind != Token::Int) throw UsageError("parse: expected integer exponent");
            RationalFunc out{Rational(1)};
            for (long long i = 0; i < t.value; ++i) out = out * v;
            if (neg) out = RationalFunc{Rational(1)} / out;
            v = out;
        }
        return v;
    }
    RationalFunc primary() {
        const Token& p = lx_.peek();
        if (p.kind == Token::Int) return RationalFunc(Rational(lx_.next().value));
        if (p.kind == Token::Sym) {
            if (!vars_) throw UsageError("parse: symbol '" + p.text + "' in constant context");
            return RationalFunc(MultiPoly::var(vars_, lx_.next().text));
        }
        if (is_punct("(")) {
            lx_.next();
            RationalFunc v = expr();
            if (!is_punct(")")) throw UsageError("parse: expected ')'");
            lx_.next();
            return v;
        }
        throw UsageError("parse: expected number, symbol, or '('");
    }
    bool is_punct(const char* t) const {
        return lx_.peek().kind == Token::Punct && lx_.peek().text == t;
    }

    Lexer& lx_;
    VarSetPtr vars_;
};

} // namespace detail

// Full-string rational function in the given indeterminates.
inline RationalFunc parse_rf(const std::string& s, const VarSetPtr& vars) {
    detail::Lexer lx(s);
    detail::ExprParser p(lx, vars);
    RationalFunc v = p.expr();
    if (lx.peek().kind != detail::Token::End) throw UsageError("parse: trailing input in '" + s + "'");
    return v;
}

// Full-string polynomial; the denominator must reduce to a constant.
inline MultiPoly parse_poly(const std::string& s, const VarSetPtr& vars = nullptr) {
    RationalFunc v = parse_rf(s, vars);
    if (!v.den().is_constant())
        throw UsageError("parse: nonconstant denominator in polynomial '" + s + "'");
    return v.num() * (Rational(1) / v.den().constant_value());
}

inline Rational parse_rational(const std::string& s) {
    return parse_poly(s, nullptr).constant_value();
}

// One golden-file term: optional coefficient expression followed by
// generator factors. "3*n*(3/2+n) * e[1,2](-1) f[1,2](0)^2".
inline ParsedTerm parse_term_line(const std::string& line, const VarSetPtr& vars) {
    detail::Lexer lx(line);
    ParsedTerm out;
    if (lx.peek().kind == detail::Token::End)
        throw UsageError("parse: empty term line");
    if (lx.peek().kind == detail::Token::Gen) {
        out.coeff = MultiPoly(Rational(1));
    } else {
        detail::ExprParser p(lx, vars);
        RationalFunc c = p.expr();
        if (!c.den().is_constant())
            throw UsageError("parse: nonconstant coefficient denominator");
        out.coeff = c.num() * (Rational(1) / c.den().constant_value());
        if (lx.peek().kind == detail::Token::Punct && lx.peek().text == "*") lx.next();
    }
    while (lx.peek().kind == detail::Token::Gen) {
        GenFactor g = lx.next().gen;
        if (lx.peek().kind == detail::Token::Punct && lx.peek().text == "(") {
            lx.next();
            bool neg = false;
            if (lx.peek().kind == detail::Token::Punct && lx.peek().text == "-") {
                lx.next();
                neg = true;
            }
            auto t = lx.next();
            if (t.kind != detail::Token::Int) throw UsageError("parse: expected mode integer");
            g.mode = neg ? -static_cast<int>(t.value) : static_cast<int>(t.value);
            t = lx.next();
            if (t.kind != detail::Token::Punct || t.text != ")")
                throw UsageError("parse: expected ')' after mode");
        }
        if (lx.peek().kind == detail::Token::Punct && lx.peek().text == "^") {
            lx.next();
            auto t = lx.next();
            if (t.kind != detail::Token::Int || t.value < 1)
                throw UsageError("parse: expected positive integer power");
            g.power = static_cast<int>(t.value);
        }
        out.factors.push_back(g);
    }
    if (lx.peek().kind != detail::Token::End)
        throw UsageError("parse: trailing input in term '" + line + "'");
    return out;
}

} // namespace kmv
