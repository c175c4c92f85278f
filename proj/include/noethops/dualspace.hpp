// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_DUALSPACE_HPP
#define NOETHOPS_DUALSPACE_HPP

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "noethops/diffop.hpp"
#include "noethops/residue.hpp"

namespace noethops {

template <class K>
using LocalOp = DiffOp<ResidueElem<K>>;

/// Echelonized basis of a truncated local dual space D^(d)_m[I].
///
/// Operators are linearly independent over kappa(m), in reduced row echelon
/// form with pivots on the lowest grevlex d-monomials, sorted by pivot; every
/// operator has order <= d.
template <class K>
struct DualBasis {
    std::shared_ptr<const ResidueField<K>> kappa;
    Ideal<K> at;  // the maximal ideal m
    int truncation = 0;
    std::vector<LocalOp<K>> ops;

    size_t dim() const { return ops.size(); }
};

/// All monomials of total degree <= d, ascending grevlex (starts at 1).
inline std::vector<Monomial> monomials_upto(const RingPtr& ring, int d) {
    std::vector<Monomial> out;
    Monomial cur(ring->nvars());
    // depth-first enumeration, then canonical sort
    std::vector<std::pair<size_t, Monomial>> stack{{0, cur}};
    while (!stack.empty()) {
        auto [i, m] = stack.back();
        stack.pop_back();
        if (i == ring->nvars()) {
            out.push_back(m);
            continue;
        }
        for (int k = 0; m.degree() + k <= d; ++k) {
            Monomial next = m;
            next.e[i] = k;
            stack.emplace_back(i + 1, next);
        }
    }
    MonomialOrder g = MonomialOrder::grevlex();
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return g.compare(a, b) < 0; });
    return out;
}

/// Apply D to f and reduce into kappa(m): the class of sum c_alpha d^alpha f.
/// Zero exactly when D.f lands in m.
template <class K>
ResidueElem<K> apply_op(const LocalOp<K>& D, const Poly<K>& f, const ResidueField<K>& kappa) {
    ResidueElem<K> acc = kappa.zero();
    for (const auto& [alpha, c] : D.terms()) {
        Poly<K> g = f;
        for (size_t i = 0; i < alpha.e.size() && !g.is_zero(); ++i)
            for (int k = 0; k < alpha.e[i]; ++k) g = g.derivative(i);
        if (g.is_zero()) continue;
        acc = acc + c * kappa.cls(g);
    }
    return acc;
}

namespace detail {

/// Derivatives of h for every d-monomial column, reusing lower-order results.
template <class K>
std::vector<Poly<K>> derivative_table(const Poly<K>& h, const std::vector<Monomial>& cols) {
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < cols.size(); ++i) index[cols[i].e] = i;
    std::vector<Poly<K>> out(cols.size(), Poly<K>::zero(h.ring()));
    for (size_t i = 0; i < cols.size(); ++i) {
        const Monomial& a = cols[i];
        if (a.is_one()) {
            out[i] = h;
            continue;
        }
        size_t v = 0;
        while (a.e[v] == 0) ++v;
        Monomial prev = a;
        prev.e[v] -= 1;
        out[i] = out[index.at(prev.e)].derivative(v);
    }
    return out;
}

template <class K>
std::vector<LocalOp<K>> ops_from_rows(const std::vector<std::vector<ResidueElem<K>>>& rows,
                                      const std::vector<Monomial>& cols, const RingPtr& ring) {
    std::vector<LocalOp<K>> ops;
    for (const auto& row : rows) {
        LocalOp<K> op(ring);
        for (size_t j = 0; j < cols.size(); ++j)
            if (!row[j].is_zero()) op.push_term_sorted(cols[j], row[j]);
        if (!op.is_zero()) ops.push_back(std::move(op));
    }
    return ops;
}

template <class K>
std::vector<std::vector<ResidueElem<K>>> rows_from_ops(const std::vector<LocalOp<K>>& ops,
                                                       const std::vector<Monomial>& cols,
                                                       const ResidueField<K>& kappa) {
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < cols.size(); ++i) index[cols[i].e] = i;
    std::vector<std::vector<ResidueElem<K>>> rows;
    for (const auto& op : ops) {
        std::vector<ResidueElem<K>> row(cols.size(), kappa.zero());
        for (const auto& [alpha, c] : op.terms()) row[index.at(alpha.e)] = c;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

/// Truncated local dual space via the Macaulay matrix.
///
/// Columns are the d-monomials of degree <= d; rows are the constraints
/// apply(D, g*u) = 0 in kappa(m) for every generator g and u running over a
/// monomial spanning set of R/m^(d+1) (for a rational point this is exactly
/// the monomials of degree <= d). The kernel is echelonized over kappa(m).
template <class K>
DualBasis<K> truncated_dual(const Ideal<K>& I, const Ideal<K>& m, int d,
                            std::shared_ptr<const ResidueField<K>> kappa = nullptr) {
    if (d < 0) throw PreconditionError("truncated_dual: negative order");
    if (!same_ring(I.ring(), m.ring()))
        throw RingMismatchError("truncated_dual: ideal and point from different rings");
    if (!kappa) kappa = ResidueField<K>::make(m);

    const RingPtr& ring = I.ring();
    std::vector<Monomial> cols = monomials_upto(ring, d);

    std::vector<Monomial> uset;
    if (m.is_zero_ideal()) {
        uset = monomials_upto(ring, d);  // 0-variable ring: {1}
    } else {
        StandardMonomialSet quot = quotient_basis(ideal_power(m, d + 1));
        uset = quot.monomials;
    }

    std::vector<std::vector<ResidueElem<K>>> rows;
    for (const auto& g : I.gens()) {
        for (const auto& u : uset) {
            Poly<K> h = g.times_monomial(u, kappa->base_one());
            auto derivs = detail::derivative_table(h, cols);
            std::vector<ResidueElem<K>> row;
            row.reserve(cols.size());
            bool nonzero = false;
            for (const auto& dv : derivs) {
                ResidueElem<K> e = kappa->cls(dv);
                nonzero = nonzero || !e.is_zero();
                row.push_back(std::move(e));
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    LinAlg<ResidueElem<K>> la(kappa->zero(), kappa->one());
    auto kernel = la.kernel(std::move(rows), cols.size());

    DualBasis<K> out{kappa, m, d, detail::ops_from_rows(kernel, cols, ring)};
    return out;
}

/// Recover I + m^d from B = D^(d-1)_m[I]: the polynomials killed by every
/// operator of B, found degree-by-degree over a spanning set of R/m^d, plus
/// the generators of m^d itself.
template <class K>
Ideal<K> annihilator_ideal(const DualBasis<K>& B) {
    const RingPtr& ring = B.at.ring();
    const auto& kappa = *B.kappa;
    const int d = B.truncation + 1;

    Ideal<K> mpow = B.at.is_zero_ideal() ? Ideal<K>::zero(ring) : ideal_power(B.at, d);
    std::vector<Monomial> smon;
    if (B.at.is_zero_ideal()) {
        smon = monomials_upto(ring, 0);
    } else {
        smon = quotient_basis(mpow).monomials;
    }

    // Unknowns are base-field coordinates over smon; each operator gives
    // deg(kappa) scalar constraint rows.
    K zero_c = kappa.base_zero();
    LinAlg<K> la(zero_c, kappa.base_one());
    std::vector<std::vector<K>> rows;
    for (const auto& op : B.ops) {
        std::vector<std::vector<K>> cc;
        cc.reserve(smon.size());
        for (const auto& s : smon) {
            Poly<K> su = Poly<K>::monomial(ring, s, kappa.base_one());
            cc.push_back(kappa.coords(apply_op(op, su, kappa)));
        }
        for (size_t r = 0; r < kappa.degree(); ++r) {
            std::vector<K> row;
            row.reserve(smon.size());
            for (size_t j = 0; j < smon.size(); ++j) row.push_back(cc[j][r]);
            rows.push_back(std::move(row));
        }
    }
    auto kernel = la.kernel(std::move(rows), smon.size());

    std::vector<Poly<K>> gens = mpow.gens();
    for (const auto& v : kernel) {
        Poly<K> f = Poly<K>::zero(ring);
        for (size_t j = 0; j < smon.size(); ++j)
            if (!v[j].is_zero()) f = f + Poly<K>::monomial(ring, smon[j], v[j]);
        if (!f.is_zero()) gens.push_back(std::move(f));
    }
    return Ideal<K>(ring, std::move(gens));
}

/// Has the dual dimension stopped growing between orders d and d+1?
template <class K>
bool dual_stabilized(const Ideal<K>& I, const Ideal<K>& m, int d) {
    auto kappa = ResidueField<K>::make(m);
    return truncated_dual(I, m, d, kappa).dim() == truncated_dual(I, m, d + 1, kappa).dim();
}

}  // namespace noethops

#endif
