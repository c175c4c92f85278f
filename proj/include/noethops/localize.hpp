// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_LOCALIZE_HPP
#define NOETHOPS_LOCALIZE_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "noethops/diffop.hpp"
#include "noethops/residue.hpp"

namespace noethops {

/// Partition of the ring variables for a prime p: free variables t (cosets
/// algebraically independent in R/p) and bound variables y. Extending
/// scalars to QQ(t) turns p into a maximal ideal of QQ(t)[y].
struct Splitting {
    RingPtr ring;                   // the original ring R
    std::vector<size_t> free_idx;   // positions of t in R, ascending
    std::vector<size_t> bound_idx;  // positions of y in R, ascending
    RingPtr tring;                  // QQ[t]
    RingPtr yring;                  // QQ(t)[y], coeff() == tring

    std::vector<std::string> free_names() const {
        std::vector<std::string> out;
        for (size_t i : free_idx) out.push_back(ring->vars[i]);
        return out;
    }
    std::vector<std::string> bound_names() const {
        std::vector<std::string> out;
        for (size_t i : bound_idx) out.push_back(ring->vars[i]);
        return out;
    }
};

namespace detail {

inline Splitting build_splitting(const RingPtr& ring, const std::vector<size_t>& free_idx) {
    Splitting s;
    s.ring = ring;
    s.free_idx = free_idx;
    for (size_t i = 0; i < ring->nvars(); ++i)
        if (std::find(free_idx.begin(), free_idx.end(), i) == free_idx.end())
            s.bound_idx.push_back(i);
    s.tring = make_ring(s.free_names());
    s.yring = make_ring(s.bound_names(), s.tring);
    return s;
}

/// Is p ∩ QQ[vars in subset] = 0?  Checked exactly by elimination: compute a
/// basis for the order eliminating the complement and look for a basis
/// element supported inside the subset.
inline bool variables_independent(const Ideal<Rational>& p, const std::vector<bool>& in_subset) {
    const size_t n = p.ring()->nvars();
    std::vector<int> perm;
    for (size_t i = 0; i < n; ++i)
        if (!in_subset[i]) perm.push_back(static_cast<int>(i));
    const size_t block = perm.size();
    for (size_t i = 0; i < n; ++i)
        if (in_subset[i]) perm.push_back(static_cast<int>(i));
    auto gb = groebner_basis(p, MonomialOrder::elim(static_cast<int>(block), perm));
    for (const auto& g : *gb) {
        bool inside = true;
        for (size_t i = 0; i < n && inside; ++i)
            if (!in_subset[i]) {
                for (const auto& t : g.terms())
                    if (t.first.e[i] > 0) {
                        inside = false;
                        break;
                    }
            }
        if (inside) return false;  // nonzero element of p in QQ[subset]
    }
    return true;
}

}  // namespace detail

/// Re-read an R-polynomial inside QQ(t)[y]: t-exponents move into the
/// coefficients, y-exponents survive as monomials.
inline Poly<RatFunc> extend_poly(const Poly<Rational>& f, const Splitting& s) {
    Poly<RatFunc> out = Poly<RatFunc>::zero(s.yring);
    for (const auto& [mono, c] : f.terms()) {
        Monomial ym(s.bound_idx.size());
        for (size_t j = 0; j < s.bound_idx.size(); ++j) ym.e[j] = mono.e[s.bound_idx[j]];
        Monomial tm(s.free_idx.size());
        for (size_t j = 0; j < s.free_idx.size(); ++j) tm.e[j] = mono.e[s.free_idx[j]];
        RatFunc coeff = RatFunc::of_poly(Poly<Rational>::monomial(s.tring, tm, c));
        out = out + Poly<RatFunc>::monomial(s.yring, ym, std::move(coeff));
    }
    return out;
}

/// I read inside QQ(t)[y] (same generators, t-variables now scalars).
inline Ideal<RatFunc> extend_scalars(const Ideal<Rational>& I, const Splitting& s) {
    std::vector<Poly<RatFunc>> gens;
    for (const auto& g : I.gens()) gens.push_back(extend_poly(g, s));
    return Ideal<RatFunc>(s.yring, std::move(gens));
}

/// Inverse of extend_poly for coefficients with trivial denominators.
inline Poly<Rational> reread_in_ring(const Poly<RatFunc>& f, const Splitting& s) {
    Poly<Rational> out = Poly<Rational>::zero(s.ring);
    const size_t n = s.ring->nvars();
    for (const auto& [ym, c] : f.terms()) {
        if (!c.den().is_constant())
            throw PreconditionError("cannot re-read: coefficient has a nontrivial denominator");
        Rational dinv = c.den().leading_coeff().inv();
        for (const auto& [tm, q] : c.num().terms()) {
            Monomial full(n);
            for (size_t j = 0; j < s.bound_idx.size(); ++j) full.e[s.bound_idx[j]] = ym.e[j];
            for (size_t j = 0; j < s.free_idx.size(); ++j) full.e[s.free_idx[j]] = tm.e[j];
            out = out + Poly<Rational>::monomial(s.ring, full, q * dinv);
        }
    }
    return out;
}

/// Splitting with an explicitly chosen set of free variables; validates
/// algebraic independence.
inline Splitting splitting_for(const Ideal<Rational>& p, const std::vector<std::string>& tvars) {
    const size_t n = p.ring()->nvars();
    std::vector<bool> sel(n, false);
    std::vector<size_t> free_idx;
    for (const auto& name : tvars) {
        int i = p.ring()->var_index(name);
        if (i < 0) throw PreconditionError("free variable '" + name + "' not in the ring");
        if (!sel[i]) {
            sel[i] = true;
            free_idx.push_back(static_cast<size_t>(i));
        }
    }
    std::sort(free_idx.begin(), free_idx.end());
    if (!detail::variables_independent(p, sel))
        throw PreconditionError("chosen free variables are not independent modulo the prime");
    return detail::build_splitting(p.ring(), free_idx);
}

/// Deterministic choice of free variables for a prime.
///
/// Among all maximal independent variable subsets, picks the one whose
/// localized prime has the smallest residue degree over QQ(t) (preferring
/// splittings where the bound variables are solved by the generators);
/// ties break toward earlier declared variables.
inline Splitting free_variables(const Ideal<Rational>& p) {
    if (is_unit_ideal(p)) throw PreconditionError("free_variables: unit ideal is not a prime");
    const size_t n = p.ring()->nvars();
    if (n > 16) throw PreconditionError("free_variables: too many variables for subset search");

    const size_t total = size_t{1} << n;
    std::vector<bool> indep(total, false);
    for (size_t mask = 0; mask < total; ++mask) {
        std::vector<bool> sel(n, false);
        for (size_t i = 0; i < n; ++i) sel[i] = (mask >> i) & 1;
        indep[mask] = detail::variables_independent(p, sel);
    }

    size_t best_mask = total;  // sentinel
    size_t best_deg = 0;
    std::vector<size_t> best_idx;
    for (size_t mask = 0; mask < total; ++mask) {
        if (!indep[mask]) continue;
        bool maximal = true;
        for (size_t i = 0; i < n && maximal; ++i)
            if (!((mask >> i) & 1) && indep[mask | (size_t{1} << i)]) maximal = false;
        if (!maximal) continue;
        std::vector<size_t> idx;
        for (size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) idx.push_back(i);
        Splitting s = detail::build_splitting(p.ring(), idx);
        StandardMonomialSet q = quotient_basis(extend_scalars(p, s));
        if (!q.finite) continue;  // not actually maximal after extension; skip
        size_t deg = q.dimension();
        if (best_mask == total || deg < best_deg || (deg == best_deg && idx < best_idx)) {
            best_mask = mask;
            best_deg = deg;
            best_idx = idx;
        }
    }
    if (best_mask == total)
        throw PreconditionError("free_variables: no splitting found (input not prime?)");
    return detail::build_splitting(p.ring(), best_idx);
}

/// Clear denominators and re-read a local dual operator as an element of
/// R<d_y>: coefficients become polynomials, the span of the operator inside
/// the dual space is unchanged (left scalars are units).
inline DiffOp<Poly<Rational>> lift_to_weyl(const DiffOp<ResidueElem<RatFunc>>& D,
                                           const Splitting& s) {
    DiffOp<Poly<Rational>> out(s.ring);
    if (D.is_zero()) return out;
    Poly<Rational> l = Poly<Rational>::constant(s.tring, Rational(1));
    for (const auto& [alpha, c] : D.terms())
        for (const auto& t : c.rep().terms()) l = poly_lcm(l, t.second.den());
    const RatFunc lf = RatFunc::of_poly(l);

    std::vector<std::pair<Monomial, Poly<Rational>>> terms;
    Poly<Rational> gcd_all = Poly<Rational>::zero(s.ring);
    for (const auto& [alpha, c] : D.terms()) {
        Poly<Rational> coeff = reread_in_ring(c.rep().scaled(lf), s);
        Monomial full(s.ring->nvars());
        for (size_t j = 0; j < s.bound_idx.size(); ++j) full.e[s.bound_idx[j]] = alpha.e[j];
        gcd_all = gcd_all.is_zero() ? make_primitive(coeff) : poly_gcd(gcd_all, coeff);
        terms.emplace_back(full, std::move(coeff));
    }
    if (!gcd_all.is_constant())
        for (auto& [m, coeff] : terms) coeff = *try_divide_exact(coeff, gcd_all);
    // joint rational content, sign keyed to the highest-order term
    Rational content(0);
    for (const auto& [m, coeff] : terms) {
        Rational c = rational_content(coeff);
        if (content.is_zero()) {
            content = c;
        } else {
            mpz_class g, lc;
            mpz_gcd(g.get_mpz_t(), content.numerator().get_mpz_t(), c.numerator().get_mpz_t());
            mpz_lcm(lc.get_mpz_t(), content.denominator().get_mpz_t(),
                    c.denominator().get_mpz_t());
            content = Rational(mpq_class(g, lc));
        }
    }
    if (terms.back().second.leading_coeff().sign() * content.sign() < 0) content = -content;
    for (auto& [m, coeff] : terms) out.push_term_sorted(m, coeff.scaled(content.inv()));
    return out;
}

/// Apply a lifted operator to a polynomial of R: sum c_alpha(x) d^alpha f.
inline Poly<Rational> weyl_apply(const DiffOp<Poly<Rational>>& D, const Poly<Rational>& f) {
    Poly<Rational> acc = Poly<Rational>::zero(f.ring());
    for (const auto& [alpha, c] : D.terms()) {
        Poly<Rational> g = f;
        for (size_t i = 0; i < alpha.e.size() && !g.is_zero(); ++i)
            for (int k = 0; k < alpha.e[i]; ++k) g = g.derivative(i);
        if (!g.is_zero()) acc = acc + c * g;
    }
    return acc;
}

}  // namespace noethops

#endif
