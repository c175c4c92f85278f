// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_DECOMP_HPP
#define NOETHOPS_DECOMP_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noethops/dualspace.hpp"
#include "noethops/localize.hpp"

namespace noethops {

/// The excess dual space E_m[I] = D_m[I] / D_m[I : m^inf] at truncation
/// order dstar, together with canonical coset representatives: the echelon
/// rows of the full dual whose pivots do not occur in the saturation dual.
template <class K>
struct ExcessDual {
    Ideal<K> at;
    int dstar = 0;
    std::vector<LocalOp<K>> reps;
    DualBasis<K> full_dual;  // D^(dstar)_m[I]
    DualBasis<K> sat_dual;   // D^(dstar)_m[I : m^inf]

    size_t dim() const { return reps.size(); }
    int max_order() const {
        int o = 0;
        for (const auto& r : reps) o = std::max(o, r.order());
        return o;
    }
};

/// Iterate truncated duals of I and sat until the quotient dimension is
/// unchanged for `stall` consecutive orders (the paper's stop rule at
/// stall = 1); finiteness of the excess dimension guarantees termination
/// when sat really is I : m^inf.
template <class K>
ExcessDual<K> excess_dual(const Ideal<K>& I, const Ideal<K>& m, const Ideal<K>& sat,
                          int stall = 1, int max_order = 64) {
    if (stall < 1) throw PreconditionError("excess_dual: stall must be >= 1");
    auto kappa = ResidueField<K>::make(m);
    for (const auto& g : I.gens())
        if (!normal_form(g, sat).is_zero())
            throw PreconditionError("excess_dual: saturation does not contain the ideal");

    // sat = I exactly when m is not associated: the excess is zero and no
    // iteration is needed. Otherwise the excess dimensions (which are
    // nondecreasing in d) stabilize at a positive value, so the transient
    // all-zero prefix is skipped before stall counting starts.
    if (ideal_equal(I, sat)) {
        DualBasis<K> b0 = truncated_dual(I, m, 0, kappa);
        DualBasis<K> s0 = truncated_dual(sat, m, 0, kappa);
        return ExcessDual<K>{m, 0, {}, std::move(b0), std::move(s0)};
    }

    std::vector<std::pair<DualBasis<K>, DualBasis<K>>> levels;
    int stable = 0;
    size_t prev = 0;
    int dstar = -1;
    for (int d = 0; d <= max_order; ++d) {
        DualBasis<K> bi = truncated_dual(I, m, d, kappa);
        DualBasis<K> bs = truncated_dual(sat, m, d, kappa);
        size_t e = bi.dim() - bs.dim();
        levels.emplace_back(std::move(bi), std::move(bs));
        if (d > 0 && e == prev && e > 0) {
            if (++stable >= stall) {
                dstar = d - stall;
                break;
            }
        } else if (d > 0) {
            stable = 0;
        }
        prev = e;
    }
    if (dstar < 0)
        throw PreconditionError(
            "excess_dual: dimension did not stabilize (is the saturation input right?)");

    const DualBasis<K>& full = levels[dstar].first;
    const DualBasis<K>& satd = levels[dstar].second;
    std::map<std::vector<int>, bool> sat_pivots;
    for (const auto& op : satd.ops) sat_pivots[op.lowest_monomial().e] = true;
    ExcessDual<K> out{m, dstar, {}, full, satd};
    for (const auto& op : full.ops)
        if (!sat_pivots.count(op.lowest_monomial().e)) out.reps.push_back(op);
    return out;
}

/// One entry of a differential primary decomposition certificate.
struct CertComponent {
    Ideal<Rational> prime;
    Splitting split;
    std::vector<DiffOp<Poly<Rational>>> ops;  // lifted Noetherian operators in R<d_y>
    size_t excess_dim = 0;
    int dstar = 0;
    int nil = 0;  // 0 when the prime is not associated (empty operator set)

    CertComponent(Ideal<Rational> p, Splitting s, std::vector<DiffOp<Poly<Rational>>> o,
                  size_t dim, int ds, int n)
        : prime(std::move(p)), split(std::move(s)), ops(std::move(o)), excess_dim(dim),
          dstar(ds), nil(n) {}
};

/// Certificate data of the differential primary decomposition: per associated
/// prime, a variable splitting and lifted operators whose cosets span the
/// excess dual of the localized ideal.
struct Certificate {
    Ideal<Rational> ideal;
    std::vector<CertComponent> components;
};

/// Build the certificate for I from its (trusted) associated primes.
///
/// Saturations I : p^inf are computed in R and then extended; localization at
/// QQ[t] \ {0} commutes with saturation by elements of R.
inline Certificate noetherian_certificate(
    const Ideal<Rational>& I, const std::vector<Ideal<Rational>>& primes, int stall = 1,
    const std::map<size_t, std::vector<std::string>>& free_var_overrides = {}) {
    if (primes.empty()) throw PreconditionError("noetherian_certificate: empty prime list");
    Certificate cert{I, {}};
    for (size_t k = 0; k < primes.size(); ++k) {
        const Ideal<Rational>& p = primes[k];
        if (!same_ring(p.ring(), I.ring()))
            throw RingMismatchError("certificate prime from a different ring");
        auto ov = free_var_overrides.find(k);
        Splitting s = ov == free_var_overrides.end() ? free_variables(p)
                                                     : splitting_for(p, ov->second);
        Ideal<Rational> satR = ideal_saturate(I, p);
        Ideal<RatFunc> Iloc = extend_scalars(I, s);
        Ideal<RatFunc> mloc = extend_scalars(p, s);
        Ideal<RatFunc> satloc = extend_scalars(satR, s);
        ExcessDual<RatFunc> ex = excess_dual(Iloc, mloc, satloc, stall);
        CertComponent comp{p, s, {}, ex.dim(), ex.dstar,
                           ex.reps.empty() ? 0 : ex.max_order() + 1};
        for (const auto& r : ex.reps) comp.ops.push_back(lift_to_weyl(r, s));
        cert.components.push_back(std::move(comp));
    }
    return cert;
}

/// Verdict of the global membership test, with a witness on failure.
struct MembershipResult {
    bool member = true;
    size_t component = 0;   // witness indices, valid when !member
    size_t op_index = 0;
    std::optional<Poly<Rational>> witness_nf;
};

/// f ∈ I iff D.f ∈ p for every certificate component p and every lifted
/// operator D of that component.
inline MembershipResult membership(const Poly<Rational>& f, const Certificate& cert) {
    for (size_t c = 0; c < cert.components.size(); ++c) {
        const CertComponent& comp = cert.components[c];
        for (size_t j = 0; j < comp.ops.size(); ++j) {
            Poly<Rational> nf = normal_form(weyl_apply(comp.ops[j], f), comp.prime);
            if (!nf.is_zero()) return MembershipResult{false, c, j, std::move(nf)};
        }
    }
    return MembershipResult{};
}

/// Pull a lifted operator back into the local dual space at kappa(m).
inline LocalOp<RatFunc> localize_weyl(const DiffOp<Poly<Rational>>& D, const Splitting& s,
                                      const std::shared_ptr<const ResidueField<RatFunc>>& kappa) {
    LocalOp<RatFunc> out(s.yring);
    for (const auto& [alpha, coeff] : D.terms()) {
        Monomial ya(s.bound_idx.size());
        for (size_t j = 0; j < s.bound_idx.size(); ++j) ya.e[j] = alpha.e[s.bound_idx[j]];
        for (size_t j = 0; j < s.free_idx.size(); ++j)
            if (alpha.e[s.free_idx[j]] != 0)
                throw PreconditionError("operator differentiates a free variable");
        ResidueElem<RatFunc> c = kappa->cls(extend_poly(coeff, s));
        if (!c.is_zero())
            out = out + LocalOp<RatFunc>::monomial(s.yring, ya, std::move(c));
    }
    return out;
}

template <class K>
struct RecoveredComponent {
    Ideal<K> ideal;
    std::optional<bool> contains_input;  // set when the caller supplies I for the check
};

/// Degree-bounded recovery of a primary component from certificate data: all
/// f of degree <= bound killed (into m) by the saturation dual and by the
/// component's operators. With adequate bounds this is I_p ∩ R<t> up to the
/// bound; with too small a bound a proper sub-ideal comes back, which the
/// contains_input flag surfaces when the input ideal is supplied.
template <class K>
RecoveredComponent<K> recover_component(const std::vector<LocalOp<K>>& component_ops,
                                        const DualBasis<K>& sat_dual, int bound,
                                        const Ideal<K>* input = nullptr) {
    const auto& kappa = *sat_dual.kappa;
    const RingPtr& ring = sat_dual.at.ring();
    std::vector<Monomial> cols = monomials_upto(ring, bound);

    std::vector<const LocalOp<K>*> all;
    for (const auto& op : sat_dual.ops) all.push_back(&op);
    for (const auto& op : component_ops) all.push_back(&op);

    K zero_c = kappa.base_zero();
    LinAlg<K> la(zero_c, kappa.base_one());
    std::vector<std::vector<K>> rows;
    for (const LocalOp<K>* op : all) {
        std::vector<std::vector<K>> cc;
        cc.reserve(cols.size());
        for (const auto& u : cols) {
            Poly<K> mu = Poly<K>::monomial(ring, u, kappa.base_one());
            cc.push_back(kappa.coords(apply_op(*op, mu, kappa)));
        }
        for (size_t r = 0; r < kappa.degree(); ++r) {
            std::vector<K> row;
            row.reserve(cols.size());
            for (size_t j = 0; j < cols.size(); ++j) row.push_back(cc[j][r]);
            rows.push_back(std::move(row));
        }
    }
    auto kernel = la.kernel(std::move(rows), cols.size());
    std::vector<Poly<K>> gens;
    for (const auto& v : kernel) {
        Poly<K> f = Poly<K>::zero(ring);
        for (size_t j = 0; j < cols.size(); ++j)
            if (!v[j].is_zero()) f = f + Poly<K>::monomial(ring, cols[j], v[j]);
        if (!f.is_zero()) gens.push_back(std::move(f));
    }
    RecoveredComponent<K> out{Ideal<K>(ring, std::move(gens)), std::nullopt};
    if (input) {
        bool ok = true;
        for (const auto& g : input->gens())
            if (!normal_form(g, out.ideal).is_zero()) {
                ok = false;
                break;
            }
        out.contains_input = ok;
    }
    return out;
}

template <class K>
struct OrtizComponent {
    Ideal<K> component;  // I + m^nil
    int nil = 0;
    ExcessDual<K> excess;
};

/// The canonical (Ortiz) m-primary component: nil is one more than the top
/// order among the excess dual representatives, and the component is
/// I + m^nil. Requires m to actually be associated (positive excess).
template <class K>
OrtizComponent<K> ortiz_component(const Ideal<K>& I, const Ideal<K>& m, int stall = 1) {
    Ideal<K> sat = ideal_saturate(I, m);
    ExcessDual<K> ex = excess_dual(I, m, sat, stall);
    if (ex.reps.empty())
        throw PreconditionError("ortiz_component: excess dual is zero, m is not associated");
    int nil = ex.max_order() + 1;
    Ideal<K> q = ideal_sum(I, ideal_power(m, nil));
    return OrtizComponent<K>{std::move(q), nil, std::move(ex)};
}

}  // namespace noethops

#endif
