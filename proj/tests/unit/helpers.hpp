// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_TEST_HELPERS_HPP
#define NOETHOPS_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "noethops/decomp.hpp"
#include "noethops/format.hpp"
#include "noethops/oracle.hpp"
#include "noethops/parse.hpp"

namespace noethops::testing {

inline RingPtr ring2() {
    static RingPtr r = make_ring({"x1", "x2"});
    return r;
}
inline RingPtr ring3() {
    static RingPtr r = make_ring({"x1", "x2", "x3"});
    return r;
}

inline Poly<Rational> P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

inline Ideal<Rational> ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
    std::vector<Poly<Rational>> gs;
    for (const auto& s : gens) gs.push_back(parse_polynomial(s, r));
    return Ideal<Rational>(r, std::move(gs));
}

/// The paper's running example I = <x1-x2^3> ∩ <x2-x1^3> ∩ <x1^3,x2^3,x1^2x2-x1x2^2>.
struct PaperExample {
    RingPtr R = ring2();
    Ideal<Rational> Q1 = ideal_of(R, {"x1 - x2^3"});
    Ideal<Rational> Q2 = ideal_of(R, {"x2 - x1^3"});
    Ideal<Rational> Q3 = ideal_of(R, {"x1^3", "x2^3", "x1^2*x2 - x1*x2^2"});
    Ideal<Rational> I = ideal_intersect(ideal_intersect(Q1, Q2), Q3);
    Ideal<Rational> m = ideal_of(R, {"x1", "x2"});
};

/// Pull an operator with constant rational coefficients into the residue
/// field of a rational maximal ideal, for comparing spans of dual bases
/// against expected operators written in d_ syntax.
inline LocalOp<Rational> local_op(const std::string& text,
                                  const std::shared_ptr<const ResidueField<Rational>>& kappa) {
    DiffOp<Poly<Rational>> w = parse_operator(text, kappa->ring());
    LocalOp<Rational> out(kappa->ring());
    for (const auto& [alpha, c] : w.terms()) {
        ResidueElem<Rational> e = kappa->cls(c);
        if (!e.is_zero()) out = out + LocalOp<Rational>::monomial(kappa->ring(), alpha, e);
    }
    return out;
}

template <class K>
std::vector<std::vector<ResidueElem<K>>> op_rows(const std::vector<LocalOp<K>>& ops,
                                                 const std::vector<Monomial>& cols,
                                                 const ResidueField<K>& kappa) {
    return detail::rows_from_ops(ops, cols, kappa);
}

/// Do two operator sets span the same kappa-subspace (at a common order)?
template <class K>
bool same_span(const std::vector<LocalOp<K>>& a, const std::vector<LocalOp<K>>& b,
               const ResidueField<K>& kappa, const RingPtr& ring, int order) {
    std::vector<Monomial> cols = monomials_upto(ring, order);
    LinAlg<ResidueElem<K>> la(kappa.zero(), kappa.one());
    return la.span_equal(op_rows(a, cols, kappa), op_rows(b, cols, kappa));
}

template <class K>
bool in_dual_span(const LocalOp<K>& op, const DualBasis<K>& basis) {
    std::vector<Monomial> cols = monomials_upto(basis.at.ring(),
                                                std::max(basis.truncation, op.order()));
    LinAlg<ResidueElem<K>> la(basis.kappa->zero(), basis.kappa->one());
    auto rows = op_rows(basis.ops, cols, *basis.kappa);
    auto pivots = la.rref(rows);
    auto v = op_rows<K>({op}, cols, *basis.kappa);
    return la.in_span(v[0], rows, pivots);
}

}  // namespace noethops::testing

#endif
