// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_ORACLE_HPP
#define NOETHOPS_ORACLE_HPP

#include <random>
#include <utility>
#include <vector>

#include "noethops/dualspace.hpp"

namespace noethops {

// Brute-force baselines for the test suite. These deliberately avoid the
// structural shortcuts of the main code paths: dense systems, plain forward
// elimination, no row filtering, and an independently coded normal form.

/// Deterministic random ideal generator (seeded, portable: raw mt19937_64
/// draws reduced by modulus, no distribution objects).
struct RandomIdealSpec {
    int nvars = 2;        // <= 3
    int max_gens = 3;     // <= 4
    int max_degree = 3;   // <= 4
    long coeff_bound = 4; // coefficients in [-bound, bound] \ {0}
    std::uint64_t seed = 1;
};

class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t raw() { return eng_(); }
    long below(long n) { return static_cast<long>(raw() % static_cast<std::uint64_t>(n)); }

  private:
    std::mt19937_64 eng_;
};

inline Poly<Rational> random_poly(const RingPtr& ring, int max_degree, long coeff_bound,
                                  RandomSource& rng) {
    std::vector<Monomial> pool = monomials_upto(ring, max_degree);
    Poly<Rational> f = Poly<Rational>::zero(ring);
    long nterms = 1 + rng.below(static_cast<long>(pool.size()));
    for (long k = 0; k < nterms; ++k) {
        const Monomial& m = pool[rng.below(static_cast<long>(pool.size()))];
        long c = rng.below(2 * coeff_bound) - coeff_bound;
        if (c == 0) c = 1;
        f = f + Poly<Rational>::monomial(ring, m, Rational(c));
    }
    return f;
}

inline Ideal<Rational> random_ideal(const RandomIdealSpec& spec, const RingPtr& ring,
                                    RandomSource& rng) {
    std::vector<Poly<Rational>> gens;
    long ngens = 1 + rng.below(spec.max_gens);
    for (long k = 0; k < ngens; ++k)
        gens.push_back(random_poly(ring, spec.max_degree, spec.coeff_bound, rng));
    return Ideal<Rational>(ring, std::move(gens));
}

namespace oracle_detail {

/// Plain forward elimination + back substitution nullspace, written
/// independently from LinAlg::kernel (no RREF canonicalization here).
template <class F>
std::vector<std::vector<F>> dense_nullspace(std::vector<std::vector<F>> m, size_t cols,
                                            const F& zero, const F& one) {
    std::vector<int> pivot_of_col(cols, -1);
    size_t row = 0;
    for (size_t c = 0; c < cols && row < m.size(); ++c) {
        size_t r = row;
        while (r < m.size() && m[r][c].is_zero()) ++r;
        if (r == m.size()) continue;
        std::swap(m[row], m[r]);
        for (size_t k = row + 1; k < m.size(); ++k) {
            if (m[k][c].is_zero()) continue;
            F f = m[k][c] / m[row][c];
            for (size_t j = c; j < cols; ++j) m[k][j] = m[k][j] - f * m[row][j];
        }
        pivot_of_col[c] = static_cast<int>(row);
        ++row;
    }
    std::vector<std::vector<F>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<F> v(cols, zero);
        v[c] = one;
        for (size_t cc = c; cc-- > 0;) {
            if (pivot_of_col[cc] < 0) continue;
            size_t pr = static_cast<size_t>(pivot_of_col[cc]);
            F acc = zero;
            for (size_t j = cc + 1; j < cols; ++j)
                if (!v[j].is_zero()) acc = acc + m[pr][j] * v[j];
            v[cc] = (zero - acc) / m[pr][cc];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace oracle_detail

/// Truncated dual the slow way: rows for every generator times every
/// monomial of degree <= d, entries computed one derivative at a time.
template <class K>
DualBasis<K> brute_dual(const Ideal<K>& I, const Ideal<K>& m, int d) {
    auto kappa = ResidueField<K>::make(m);
    const RingPtr& ring = I.ring();
    std::vector<Monomial> cols = monomials_upto(ring, d);
    std::vector<std::vector<ResidueElem<K>>> rows;
    for (const auto& g : I.gens()) {
        for (const auto& u : monomials_upto(ring, d)) {
            Poly<K> h = g * Poly<K>::monomial(ring, u, kappa->base_one());
            std::vector<ResidueElem<K>> row;
            for (const auto& alpha : cols) {
                Poly<K> df = h;
                for (size_t i = 0; i < alpha.e.size() && !df.is_zero(); ++i)
                    for (int k = 0; k < alpha.e[i]; ++k) df = df.derivative(i);
                row.push_back(kappa->cls(df));
            }
            rows.push_back(std::move(row));
        }
    }
    auto basis =
        oracle_detail::dense_nullspace(std::move(rows), cols.size(), kappa->zero(), kappa->one());
    DualBasis<K> out{kappa, m, d, {}};
    for (const auto& v : basis) {
        LocalOp<K> op(ring);
        for (size_t j = 0; j < cols.size(); ++j)
            if (!v[j].is_zero()) op.push_term_sorted(cols[j], v[j]);
        if (!op.is_zero()) out.ops.push_back(std::move(op));
    }
    return out;
}

namespace oracle_detail {

/// Minimal no-criteria Buchberger + top-reduction normal form, kept separate
/// from the main engine and run under lex by default.
template <class K>
std::vector<Poly<K>> naive_gb(const Ideal<K>& I, const MonomialOrder& ord) {
    std::vector<Poly<K>> basis;
    for (const auto& g : I.gens()) basis.push_back(g.reordered(ord));
    auto reduce = [&](Poly<K> h) {
        Poly<K> rem(h.ring(), ord);
        while (!h.is_zero()) {
            bool any = false;
            for (const auto& g : basis) {
                if (!g.leading_monomial().divides(h.leading_monomial())) continue;
                h = h - g.times_monomial(h.leading_monomial() / g.leading_monomial(),
                                         h.leading_coeff() / g.leading_coeff());
                any = true;
                break;
            }
            if (!any) {
                auto lt = Poly<K>::monomial(h.ring(), h.leading_monomial(), h.leading_coeff());
                rem = rem + lt;
                h = h - lt;
            }
        }
        return rem;
    };
    size_t fixed = 0;
    while (fixed < basis.size()) {
        size_t sz = basis.size();
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = i + 1; j < sz; ++j) {
                if (i < fixed && j < fixed) continue;
                Monomial l = Monomial::lcm(basis[i].leading_monomial(),
                                           basis[j].leading_monomial());
                Poly<K> s = basis[i].times_monomial(l / basis[i].leading_monomial(),
                                                    basis[i].leading_coeff().inv()) -
                            basis[j].times_monomial(l / basis[j].leading_monomial(),
                                                    basis[j].leading_coeff().inv());
                Poly<K> r = reduce(std::move(s));
                if (!r.is_zero()) basis.push_back(std::move(r));
            }
        fixed = sz;
    }
    return basis;
}

}  // namespace oracle_detail

/// Reusable membership oracle: the naive basis is computed once, queries are
/// top-reductions against it.
template <class K>
class BruteMembership {
  public:
    explicit BruteMembership(const Ideal<K>& I, MonomialOrder ord = MonomialOrder::lex())
        : ord_(std::move(ord)), basis_(oracle_detail::naive_gb(I, ord_)) {}

    bool contains(const Poly<K>& f) const {
        if (f.is_zero()) return true;
        Poly<K> h = f.reordered(ord_);
        while (!h.is_zero()) {
            bool any = false;
            for (const auto& g : basis_) {
                if (!g.leading_monomial().divides(h.leading_monomial())) continue;
                h = h - g.times_monomial(h.leading_monomial() / g.leading_monomial(),
                                         h.leading_coeff() / g.leading_coeff());
                any = true;
                break;
            }
            if (!any) return false;  // an irreducible leading term survives
        }
        return true;
    }

  private:
    MonomialOrder ord_;
    std::vector<Poly<K>> basis_;
};

/// Membership via an independently coded normal form (naive Buchberger, lex).
template <class K>
bool brute_membership(const Poly<K>& f, const Ideal<K>& I,
                      const MonomialOrder& ord = MonomialOrder::lex()) {
    return BruteMembership<K>(I, ord).contains(f);
}

}  // namespace noethops

#endif
