// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#include "noethops/parse.hpp"

#include <cctype>

#include "noethops/errors.hpp"

namespace noethops {

namespace {

struct Token {
    enum class Kind { Ident, Int, Sym, End } kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool at_sym(const char* s) const { return tok_.kind == Token::Kind::Sym && tok_.text == s; }
    bool at_ident(const char* s) const {
        return tok_.kind == Token::Kind::Ident && tok_.text == s;
    }
    Token expect_sym(const char* s) {
        if (!at_sym(s)) fail(std::string("'") + s + "'");
        return take();
    }
    Token expect_ident() {
        if (tok_.kind != Token::Kind::Ident) fail("identifier");
        return take();
    }
    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError("parse error at line " + std::to_string(tok_.line) + ", column " +
                             std::to_string(tok_.col) + ": expected " + expected +
                             (tok_.kind == Token::Kind::End ? " before end of input"
                                                            : ", found '" + tok_.text + "'"),
                         tok_.line, tok_.col, expected);
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        tok_ = Token{Token::Kind::End, "", line_, col_};
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        tok_.line = line_;
        tok_.col = col_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                consume();
            tok_.kind = Token::Kind::Int;
            tok_.text = text_.substr(start, pos_ - start);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                consume();
            tok_.kind = Token::Kind::Ident;
            tok_.text = text_.substr(start, pos_ - start);
        } else {
            static const std::string syms = "+-*/^(),;=[]";
            if (syms.find(c) == std::string::npos)
                throw ParseError("parse error at line " + std::to_string(line_) + ", column " +
                                     std::to_string(col_) + ": unexpected character '" +
                                     std::string(1, c) + "'",
                                 line_, col_, "token");
            tok_.kind = Token::Kind::Sym;
            tok_.text = std::string(1, c);
            consume();
        }
    }
    void consume() {
        ++col_;
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

class ExprParser {
  public:
    ExprParser(Lexer& lex, RingPtr ring) : lex_(lex), ring_(std::move(ring)) {}

    ParsedExpr parse() {
        ParsedExpr v = sum();
        return v;
    }

    ParsedExpr sum() {
        bool neg = false;
        if (lex_.at_sym("-")) {
            lex_.take();
            neg = true;
        } else if (lex_.at_sym("+")) {
            lex_.take();
        }
        ParsedExpr acc = term();
        if (neg) acc = -acc;
        while (lex_.at_sym("+") || lex_.at_sym("-")) {
            bool sub = lex_.take().text == "-";
            ParsedExpr t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

  private:
    ParsedExpr term() {
        ParsedExpr acc = factor();
        while (lex_.at_sym("*") || lex_.at_sym("/")) {
            bool div = lex_.take().text == "/";
            ParsedExpr f = factor();
            acc = div ? divide(acc, f) : multiply(acc, f);
        }
        return acc;
    }

    ParsedExpr factor() {
        ParsedExpr b = base();
        if (lex_.at_sym("^")) {
            Token caret = lex_.take();
            if (lex_.peek().kind != Token::Kind::Int) lex_.fail("exponent");
            Token e = lex_.take();
            long n = 0;
            try {
                n = std::stol(e.text);
            } catch (...) {
                throw ParseError("malformed exponent at line " + std::to_string(e.line) +
                                     ", column " + std::to_string(e.col),
                                 e.line, e.col, "nonnegative integer");
            }
            ParsedExpr acc = one();
            for (long k = 0; k < n; ++k) acc = multiply(acc, b);
            (void)caret;
            return acc;
        }
        return b;
    }

    ParsedExpr base() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Int) {
            Token v = lex_.take();
            return scalar(RatFunc::constant(ring_, Rational::from_decimal_string(v.text)));
        }
        if (t.kind == Token::Kind::Ident) {
            Token v = lex_.take();
            if (v.text.rfind("d_", 0) == 0) {
                std::string var = v.text.substr(2);
                int i = ring_->var_index(var);
                if (i < 0)
                    throw ParseError("unknown variable '" + var + "' at line " +
                                         std::to_string(v.line) + ", column " +
                                         std::to_string(v.col),
                                     v.line, v.col, "ring variable");
                return ParsedExpr::monomial(ring_, Monomial::var(ring_->nvars(), i),
                                            RatFunc::one(ring_));
            }
            int i = ring_->var_index(v.text);
            if (i < 0)
                throw ParseError("unknown variable '" + v.text + "' at line " +
                                     std::to_string(v.line) + ", column " + std::to_string(v.col),
                                 v.line, v.col, "ring variable");
            Poly<Rational> x = Poly<Rational>::variable(ring_, i, Rational(1));
            return scalar(RatFunc::of_poly(x));
        }
        if (lex_.at_sym("(")) {
            lex_.take();
            ParsedExpr inner = sum();
            lex_.expect_sym(")");
            return inner;
        }
        lex_.fail("term");
    }

    ParsedExpr one() { return scalar(RatFunc::one(ring_)); }
    ParsedExpr scalar(RatFunc c) {
        return ParsedExpr::constant(ring_, std::move(c));
    }

    ParsedExpr multiply(const ParsedExpr& a, const ParsedExpr& b) {
        ParsedExpr out(ring_);
        for (const auto& [am, ac] : a.terms())
            for (const auto& [bm, bc] : b.terms()) {
                RatFunc c = ac * bc;
                if (!c.is_zero())
                    out = out + ParsedExpr::monomial(ring_, am * bm, std::move(c));
            }
        return out;
    }

    ParsedExpr divide(const ParsedExpr& a, const ParsedExpr& b) {
        if (b.is_zero()) throw ParseError("division by zero in expression", 0, 0, "nonzero divisor");
        if (b.order() != 0)
            throw ParseError("division by a differential operator", 0, 0, "scalar divisor");
        const RatFunc& d = b.terms().front().second;
        ParsedExpr out(ring_);
        for (const auto& [am, ac] : a.terms()) {
            RatFunc c = ac / d;
            if (!c.is_zero()) out = out + ParsedExpr::monomial(ring_, am, std::move(c));
        }
        return out;
    }

    Lexer& lex_;
    RingPtr ring_;
};

Rational parse_rational_token(Lexer& lex) {
    bool neg = false;
    if (lex.at_sym("-")) {
        lex.take();
        neg = true;
    }
    if (lex.peek().kind != Token::Kind::Int) lex.fail("rational number");
    Rational num = Rational::from_decimal_string(lex.take().text);
    if (lex.at_sym("/")) {
        lex.take();
        if (lex.peek().kind != Token::Kind::Int) lex.fail("denominator");
        Rational den = Rational::from_decimal_string(lex.take().text);
        if (den.is_zero()) lex.fail("nonzero denominator");
        num = num / den;
    }
    return neg ? -num : num;
}

}  // namespace

ParsedExpr parse_expression(const std::string& text, const RingPtr& ring) {
    Lexer lex(text);
    ExprParser p(lex, ring);
    ParsedExpr v = p.parse();
    if (lex.peek().kind != Token::Kind::End) lex.fail("end of expression");
    return v;
}

Poly<Rational> parse_polynomial(const std::string& text, const RingPtr& ring) {
    ParsedExpr v = parse_expression(text, ring);
    Poly<Rational> out = Poly<Rational>::zero(ring);
    for (const auto& [m, c] : v.terms()) {
        if (m.degree() != 0)
            throw ParseError("expected a polynomial, found differential symbols in '" + text + "'",
                             1, 1, "polynomial");
        if (!c.is_polynomial())
            throw ParseError("expected a polynomial, found a rational function in '" + text + "'",
                             1, 1, "polynomial");
        Rational d = c.den().leading_coeff();
        for (const auto& [pm, pc] : c.num().terms())
            out = out + Poly<Rational>::monomial(ring, pm, pc / d);
    }
    return out;
}

DiffOp<Poly<Rational>> parse_operator(const std::string& text, const RingPtr& ring) {
    ParsedExpr v = parse_expression(text, ring);
    DiffOp<Poly<Rational>> out(ring);
    for (const auto& [alpha, c] : v.terms()) {
        if (!c.is_polynomial())
            throw ParseError(
                "operator coefficient has a nontrivial denominator in '" + text + "'", 1, 1,
                "polynomial coefficient");
        Rational d = c.den().leading_coeff();
        Poly<Rational> coeff = c.num().scaled(d.inv());
        if (!coeff.is_zero())
            out = out + DiffOp<Poly<Rational>>::monomial(ring, alpha, std::move(coeff));
    }
    return out;
}

Ideal<Rational> ProblemFile::point_ideal(const std::string& name) const {
    const std::vector<Rational>* p = find_point(name);
    if (!p) throw PreconditionError("unknown point '" + name + "'");
    std::vector<Poly<Rational>> gens;
    for (size_t i = 0; i < ring->nvars(); ++i) {
        Poly<Rational> g = Poly<Rational>::variable(ring, i, Rational(1)) -
                           Poly<Rational>::constant(ring, (*p)[i]);
        gens.push_back(std::move(g));
    }
    return Ideal<Rational>(ring, std::move(gens));
}

Ideal<Rational> ProblemFile::locus(const std::string& name) const {
    if (find_point(name)) return point_ideal(name);
    const Ideal<Rational>* I = find_ideal(name);
    if (!I) throw PreconditionError("unknown point or ideal '" + name + "'");
    return *I;
}

ProblemFile parse_problem(const std::string& text) {
    Lexer lex(text);
    ProblemFile out;

    auto known = [&](const std::string& name) {
        return out.find_ideal(name) != nullptr || out.find_point(name) != nullptr;
    };

    while (lex.peek().kind != Token::Kind::End) {
        Token kw = lex.expect_ident();
        if (kw.text == "ring") {
            if (out.ring) lex.fail("single ring declaration");
            Token field = lex.expect_ident();
            if (field.text != "QQ")
                throw ParseError("unsupported field '" + field.text + "' at line " +
                                     std::to_string(field.line) + " (only QQ)",
                                 field.line, field.col, "QQ");
            lex.expect_sym("[");
            std::vector<std::string> vars;
            while (true) {
                Token v = lex.expect_ident();
                for (const auto& seen : vars)
                    if (seen == v.text)
                        throw ParseError("duplicate variable '" + v.text + "' at line " +
                                             std::to_string(v.line),
                                         v.line, v.col, "fresh variable");
                if (v.text.rfind("d_", 0) == 0 || v.text.find('@') != std::string::npos)
                    throw ParseError("reserved variable name '" + v.text + "'", v.line, v.col,
                                     "plain variable name");
                vars.push_back(v.text);
                if (lex.at_sym(",")) {
                    lex.take();
                    continue;
                }
                break;
            }
            lex.expect_sym("]");
            lex.expect_sym(";");
            out.ring = make_ring(std::move(vars));
            continue;
        }
        if (!out.ring)
            throw ParseError("the ring must be declared first (line " + std::to_string(kw.line) +
                                 ")",
                             kw.line, kw.col, "ring declaration");
        if (kw.text == "ideal") {
            Token name = lex.expect_ident();
            if (known(name.text))
                throw ParseError("duplicate name '" + name.text + "' at line " +
                                     std::to_string(name.line),
                                 name.line, name.col, "fresh name");
            lex.expect_sym("=");
            if (lex.at_ident("intersect")) {
                lex.take();
                lex.expect_sym("(");
                std::vector<const Ideal<Rational>*> parts;
                while (true) {
                    Token ref = lex.expect_ident();
                    const Ideal<Rational>* I = out.find_ideal(ref.text);
                    if (!I)
                        throw ParseError("unknown ideal '" + ref.text + "' at line " +
                                             std::to_string(ref.line),
                                         ref.line, ref.col, "declared ideal");
                    parts.push_back(I);
                    if (lex.at_sym(",")) {
                        lex.take();
                        continue;
                    }
                    break;
                }
                lex.expect_sym(")");
                lex.expect_sym(";");
                if (parts.empty()) lex.fail("ideal name");
                Ideal<Rational> acc = *parts[0];
                for (size_t i = 1; i < parts.size(); ++i) acc = ideal_intersect(acc, *parts[i]);
                out.ideals.emplace_back(name.text, std::move(acc));
            } else {
                std::vector<Poly<Rational>> gens;
                while (true) {
                    ExprParser ep(lex, out.ring);
                    ParsedExpr e = ep.sum();
                    Poly<Rational> g = Poly<Rational>::zero(out.ring);
                    for (const auto& [m, c] : e.terms()) {
                        if (m.degree() != 0) lex.fail("polynomial (no d_ symbols)");
                        if (!c.is_polynomial()) lex.fail("polynomial coefficient");
                        Rational d = c.den().leading_coeff();
                        for (const auto& [pm, pc] : c.num().terms())
                            g = g + Poly<Rational>::monomial(out.ring, pm, pc / d);
                    }
                    gens.push_back(std::move(g));
                    if (lex.at_sym(",")) {
                        lex.take();
                        continue;
                    }
                    break;
                }
                lex.expect_sym(";");
                out.ideals.emplace_back(name.text, Ideal<Rational>(out.ring, std::move(gens)));
            }
            continue;
        }
        if (kw.text == "point") {
            Token name = lex.expect_ident();
            if (known(name.text))
                throw ParseError("duplicate name '" + name.text + "' at line " +
                                     std::to_string(name.line),
                                 name.line, name.col, "fresh name");
            lex.expect_sym("=");
            lex.expect_sym("(");
            std::vector<Rational> coords;
            while (true) {
                coords.push_back(parse_rational_token(lex));
                if (lex.at_sym(",")) {
                    lex.take();
                    continue;
                }
                break;
            }
            lex.expect_sym(")");
            lex.expect_sym(";");
            if (coords.size() != out.ring->nvars())
                throw ParseError("point '" + name.text + "' has " +
                                     std::to_string(coords.size()) + " coordinates, ring has " +
                                     std::to_string(out.ring->nvars()),
                                 name.line, name.col, "matching coordinate count");
            out.points.emplace_back(name.text, std::move(coords));
            continue;
        }
        if (kw.text == "primes") {
            while (true) {
                Token ref = lex.expect_ident();
                if (!out.find_ideal(ref.text))
                    throw ParseError("unknown ideal '" + ref.text + "' in primes list at line " +
                                         std::to_string(ref.line),
                                     ref.line, ref.col, "declared ideal");
                out.primes.push_back(ref.text);
                if (lex.at_sym(",")) {
                    lex.take();
                    continue;
                }
                break;
            }
            lex.expect_sym(";");
            continue;
        }
        throw ParseError("unknown statement '" + kw.text + "' at line " + std::to_string(kw.line),
                         kw.line, kw.col, "ring/ideal/point/primes");
    }
    if (!out.ring)
        throw ParseError("empty problem: no ring declaration", 1, 1, "ring declaration");
    return out;
}

}  // namespace noethops
