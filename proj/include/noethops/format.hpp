// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_FORMAT_HPP
#define NOETHOPS_FORMAT_HPP

#include <string>

#include "noethops/diffop.hpp"
#include "noethops/residue.hpp"

namespace noethops {

// Canonical text forms. Every printer emits strings the parser accepts, and
// values in canonical representation print identically across runs.

namespace fmt_detail {

inline std::string monomial_str(const Monomial& m, const Ring& ring, const char* prefix = "") {
    std::string s;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += prefix + ring.vars[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

struct CoeffText {
    std::string text;     // magnitude, no sign
    bool negative = false;
    bool is_unit = false;  // |c| = 1, so "c*" can be dropped before a monomial
    bool needs_parens = false;
};

inline CoeffText coeff_text(const Rational& c) {
    CoeffText t;
    t.negative = c.sign() < 0;
    Rational a = t.negative ? -c : c;
    t.text = a.str();
    t.is_unit = a.is_one();
    return t;
}

}  // namespace fmt_detail

inline std::string to_string(const Rational& c) { return c.str(); }

template <class K>
std::string to_string(const Poly<K>& p);

namespace fmt_detail {

inline CoeffText coeff_text(const RatFunc& c) {
    CoeffText t;
    if (c.is_polynomial()) {
        const auto& n = c.num();
        Rational scale = c.den().leading_coeff();  // monic: 1
        if (n.is_constant()) {
            Rational v = n.is_zero() ? Rational(0) : n.leading_coeff() / scale;
            return coeff_text(v);
        }
        if (n.nterms() == 1 && n.leading_coeff().is_one() && scale.is_one()) {
            // single monic t-monomial: print bare, e.g. t^2*d_y
            t.text = monomial_str(n.leading_monomial(), *n.ring());
            t.is_unit = false;
            return t;
        }
        t.text = "(" + to_string(n) + ")";
        t.needs_parens = false;  // already wrapped
        return t;
    }
    t.text = "(" + ("(" + to_string(c.num()) + ")/(" + to_string(c.den()) + ")") + ")";
    return t;
}

}  // namespace fmt_detail

/// Polynomial in display order (lex descending), e.g. "x1^2*x2 - 2/3*x1*x2^2 + 1".
template <class K>
std::string to_string(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    const Poly<K> display = p.order().key() == MonomialOrder::lex().key()
                                ? p
                                : p.reordered(MonomialOrder::lex());
    std::string s;
    bool first = true;
    for (const auto& [m, c] : display.terms()) {
        fmt_detail::CoeffText t = fmt_detail::coeff_text(c);
        if (first) {
            if (t.negative) s += "-";
        } else {
            s += t.negative ? " - " : " + ";
        }
        first = false;
        std::string ms = fmt_detail::monomial_str(m, *p.ring());
        if (ms.empty()) {
            s += t.text;
        } else if (t.is_unit) {
            s += ms;
        } else {
            s += t.text + "*" + ms;
        }
    }
    return s;
}

inline std::string to_string(const RatFunc& c) {
    if (c.is_polynomial()) {
        std::string n = to_string(c.num());
        Rational d = c.den().leading_coeff();
        if (d.is_one()) return n;
        return "(" + n + ")/" + d.str();
    }
    return "(" + to_string(c.num()) + ")/(" + to_string(c.den()) + ")";
}

namespace fmt_detail {

/// Shared operator printer: terms descending by d-monomial (matching the
/// usual presentation d1^2*d2 + d1*d2^2), coefficients via coeff_text.
template <class C, class CoeffFn>
std::string op_string(const DiffOp<C>& op, const Ring& ring, CoeffFn coeff_fn) {
    if (op.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
        const auto& [alpha, c] = *it;
        CoeffText t = coeff_fn(c);
        if (first) {
            if (t.negative) s += "-";
        } else {
            s += t.negative ? " - " : " + ";
        }
        first = false;
        std::string ds = monomial_str(alpha, ring, "d_");
        if (ds.empty()) {
            s += t.text;
        } else if (t.is_unit) {
            s += ds;
        } else {
            s += t.text + "*" + ds;
        }
    }
    return s;
}

}  // namespace fmt_detail

/// Lifted (Weyl) operator with polynomial coefficients, e.g.
/// "d_x1^2*d_x2 + d_x1*d_x2^2" or "(x2^2 - 1)*d_x1".
inline std::string to_string(const DiffOp<Poly<Rational>>& op) {
    return fmt_detail::op_string(op, *op.ring(), [](const Poly<Rational>& c) {
        fmt_detail::CoeffText t;
        if (c.is_constant()) return fmt_detail::coeff_text(c.leading_coeff());
        if (c.nterms() == 1 && c.leading_coeff().is_one()) {
            t.text = fmt_detail::monomial_str(c.leading_monomial(), *c.ring());
            return t;
        }
        t.text = "(" + to_string(c) + ")";
        return t;
    });
}

/// Local dual operator with residue-class coefficients.
template <class K>
std::string to_string(const DiffOp<ResidueElem<K>>& op) {
    return fmt_detail::op_string(op, *op.ring(), [](const ResidueElem<K>& c) {
        const Poly<K>& rep = c.rep();
        if (rep.is_constant() && !rep.is_zero()) return fmt_detail::coeff_text(rep.leading_coeff());
        fmt_detail::CoeffText t;
        t.text = "(" + to_string(rep) + ")";
        return t;
    });
}

}  // namespace noethops

#endif
