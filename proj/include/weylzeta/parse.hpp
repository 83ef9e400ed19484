/*
 * parse.hpp
 * ---------
 * Recursive-descent parser and canonical printer for operator and exponent
 * expressions.
 *
 * Grammar (operator expressions):
 *
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ['^' nat]
 *   atom   := nat | nat '/' nat | ident | '(' expr ')'
 *
 * The identifiers z, w, d, th are reserved: z/w are the variable on the
 * two sides of the Fourier transform (an expression may use one of them,
 * not both), d is the derivative and th the Euler operator z*d. Every
 * other identifier is a formal parameter. Multiplication is noncommutative
 * and recorded left to right; exponents are nonnegative integer literals.
 *
 * The printer emits fully expanded normally ordered terms sorted by
 * (derivative degree desc, variable degree desc), and parse(print(P)) == P.
 */
#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "exponent.hpp"
#include "weyl.hpp"

namespace weylzeta {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

namespace detail {

struct Token {
    enum Kind { Nat, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Nat, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Token::Ident, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '^': k = Token::Caret; break;
            case '/': k = Token::Slash; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Token::End, "", src.size()});
    return out;
}

class OperatorParser {
public:
    OperatorParser(const std::string& src) : toks_(tokenize(src)) {
        for (const auto& t : toks_) {
            if (t.kind != Token::Ident) continue;
            if (t.text == "z") saw_z_ = true;
            if (t.text == "w") saw_w_ = true;
        }
        if (saw_z_ && saw_w_)
            throw ParseError("expression mixes the variables z and w", 0);
        side_ = saw_w_ ? VarSide::W : VarSide::Z;
    }

    WeylOp parse() {
        WeylOp r = expr();
        expect(Token::End, "end of input");
        return r;
    }

private:
    const Token& peek() const { return toks_[idx_]; }
    const Token& next() { return toks_[idx_++]; }
    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k) throw ParseError("expected " + what, peek().pos);
        ++idx_;
    }

    WeylOp expr() {
        bool neg = false;
        if (peek().kind == Token::Minus) { neg = true; ++idx_; }
        WeylOp acc = term();
        if (neg) acc = -acc;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = next().kind == Token::Minus;
            WeylOp t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    WeylOp term() {
        WeylOp acc = factor();
        while (peek().kind == Token::Star) {
            ++idx_;
            acc = acc * factor();
        }
        return acc;
    }

    WeylOp factor() {
        WeylOp base = atom();
        if (peek().kind == Token::Caret) {
            ++idx_;
            if (peek().kind != Token::Nat)
                throw ParseError("exponent must be a nonnegative integer literal", peek().pos);
            long long e = std::stoll(next().text);
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    WeylOp atom() {
        const Token& t = next();
        switch (t.kind) {
            case Token::Nat: {
                long long n = std::stoll(t.text);
                if (peek().kind == Token::Slash) {
                    ++idx_;
                    if (peek().kind != Token::Nat)
                        throw ParseError("expected denominator", peek().pos);
                    long long d = std::stoll(next().text);
                    if (d == 0) throw ParseError("zero denominator", t.pos);
                    return WeylOp::scalar(PolyScalar(Rational(n, d)), side_);
                }
                return WeylOp::scalar(PolyScalar(n), side_);
            }
            case Token::Ident: {
                if (t.text == "z" || t.text == "w") return WeylOp::variable(side_);
                if (t.text == "d") return WeylOp::derivative(side_);
                if (t.text == "th") return WeylOp::euler(side_);
                return WeylOp::scalar(PolyScalar::parameter(t.text), side_);
            }
            case Token::LParen: {
                WeylOp r = expr();
                expect(Token::RParen, "')'");
                return r;
            }
            default:
                throw ParseError("expected a number, identifier or '('", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
    bool saw_z_ = false, saw_w_ = false;
    VarSide side_ = VarSide::Z;
};

// One fully expanded printable term: rational coefficient, parameter
// monomial, variable power, derivative power.
struct FlatTerm {
    Rational coeff;
    Monomial params;
    int j = 0, k = 0;
};

inline std::string render_flat_term(const FlatTerm& t, VarSide side) {
    std::vector<std::string> parts;
    Rational c = t.coeff.is_negative() ? -t.coeff : t.coeff;
    for (const auto& [name, e] : t.params)
        parts.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    if (t.j > 0) {
        std::string v = side_letter(side);
        parts.push_back(t.j == 1 ? v : v + "^" + std::to_string(t.j));
    }
    if (t.k > 0) parts.push_back(t.k == 1 ? std::string("d") : "d^" + std::to_string(t.k));
    std::string body;
    if (parts.empty()) {
        body = c.str();
    } else {
        if (c != Rational(1)) body = c.str() + "*";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) body += "*";
            body += parts[i];
        }
    }
    return body;
}

} // namespace detail

inline WeylOp parse_operator(const std::string& text) {
    return detail::OperatorParser(text).parse();
}

inline std::string print_operator(const WeylOp& p) {
    if (p.is_zero()) return "0";
    std::vector<detail::FlatTerm> flat;
    // (k desc, j desc), then parameter monomials high grlex first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::vector<detail::FlatTerm> cell;
        for (const auto& [m, c] : it->second.terms())
            cell.push_back({c, m, it->first.first, it->first.second});
        for (auto rit = cell.rbegin(); rit != cell.rend(); ++rit) flat.push_back(*rit);
    }
    std::stable_sort(flat.begin(), flat.end(),
                     [](const detail::FlatTerm& a, const detail::FlatTerm& b) {
                         if (a.k != b.k) return a.k > b.k;
                         return a.j > b.j;
                     });
    std::string out;
    bool first = true;
    for (const auto& t : flat) {
        if (first) {
            if (t.coeff.is_negative()) out += "-";
        } else {
            out += t.coeff.is_negative() ? " - " : " + ";
        }
        out += detail::render_flat_term(t, p.side());
        first = false;
    }
    return out;
}

// Exponent expressions: ['-'] eterm (('+'|'-') eterm)* where an eterm is a
// rational literal, an identifier, or rational '*' identifier.
inline ExponentQ parse_exponent(const std::string& text) {
    auto toks = detail::tokenize(text);
    std::size_t i = 0;
    auto peek = [&]() -> const detail::Token& { return toks[i]; };
    auto rat = [&]() -> Rational {
        if (peek().kind != detail::Token::Nat)
            throw ParseError("expected a number", peek().pos);
        long long n = std::stoll(toks[i++].text);
        if (peek().kind == detail::Token::Slash) {
            ++i;
            if (peek().kind != detail::Token::Nat)
                throw ParseError("expected denominator", peek().pos);
            long long d = std::stoll(toks[i++].text);
            if (d == 0) throw ParseError("zero denominator", peek().pos);
            return Rational(n, d);
        }
        return Rational(n);
    };
    ExponentQ acc;
    bool first = true;
    while (true) {
        Rational sign(1);
        if (peek().kind == detail::Token::Minus) { sign = Rational(-1); ++i; }
        else if (peek().kind == detail::Token::Plus) { ++i; }
        else if (!first) break;
        ExponentQ t;
        if (peek().kind == detail::Token::Nat) {
            Rational c = rat();
            if (peek().kind == detail::Token::Star) {
                ++i;
                if (peek().kind != detail::Token::Ident)
                    throw ParseError("expected a parameter name", peek().pos);
                t = ExponentQ::parameter(toks[i++].text, c);
            } else {
                t = ExponentQ(c);
            }
        } else if (peek().kind == detail::Token::Ident) {
            t = ExponentQ::parameter(toks[i++].text);
        } else {
            throw ParseError("expected a number or parameter name", peek().pos);
        }
        acc = acc + t.scaled(sign);
        first = false;
        if (peek().kind == detail::Token::End) break;
        if (peek().kind != detail::Token::Plus && peek().kind != detail::Token::Minus)
            throw ParseError("expected '+', '-' or end of input", peek().pos);
    }
    return acc;
}

} // namespace weylzeta
