// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_PARSE_HPP
#define NOETHOPS_PARSE_HPP

#include <string>
#include <vector>

#include "noethops/diffop.hpp"
#include "noethops/groebner.hpp"
#include "noethops/ratfunc.hpp"

namespace noethops {

/// Result of parsing an expression in a ring context: a formal sum of
/// d-monomials with rational-function coefficients over the full ring.
/// Plain polynomials are the order-0, denominator-free case.
using ParsedExpr = DiffOp<RatFunc>;

/// Parse a polynomial/operator expression.
///
///   poly  := ['-'] term (('+' | '-') term)*
///   term  := factor (('*' | '/') factor)*
///   factor:= base ('^' nat)?
///   base  := int | var | d_var | '(' poly ')'
///
/// Variables come from the ring; `d_<var>` is the derivation symbol for that
/// variable. Division is by scalar (variable-free or parenthesized rational
/// function) values only.
ParsedExpr parse_expression(const std::string& text, const RingPtr& ring);

/// Expression restricted to a polynomial (order 0, polynomial coefficient).
Poly<Rational> parse_polynomial(const std::string& text, const RingPtr& ring);

/// Expression restricted to an operator with polynomial coefficients.
DiffOp<Poly<Rational>> parse_operator(const std::string& text, const RingPtr& ring);

/// A parsed problem file: one ring, named ideals, named rational points,
/// and an optional associated-primes list (names of declared ideals).
struct ProblemFile {
    RingPtr ring;
    std::vector<std::pair<std::string, Ideal<Rational>>> ideals;
    std::vector<std::pair<std::string, std::vector<Rational>>> points;
    std::vector<std::string> primes;

    const Ideal<Rational>* find_ideal(const std::string& name) const {
        for (const auto& [n, I] : ideals)
            if (n == name) return &I;
        return nullptr;
    }
    const std::vector<Rational>* find_point(const std::string& name) const {
        for (const auto& [n, p] : points)
            if (n == name) return &p;
        return nullptr;
    }
    /// The maximal ideal <x_i - p_i> of a named point.
    Ideal<Rational> point_ideal(const std::string& name) const;
    /// Named point or maximal ideal, normalized to an ideal.
    Ideal<Rational> locus(const std::string& name) const;
};

/// Parse a full problem file:
///   ring QQ[x1, x2];
///   ideal I = x1 - x2^3;
///   ideal J = intersect(I, K);
///   point origin = (0, 0);
///   primes I, J;
ProblemFile parse_problem(const std::string& text);

}  // namespace noethops

#endif
