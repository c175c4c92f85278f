// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_DIFFOP_HPP
#define NOETHOPS_DIFFOP_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "noethops/monomial.hpp"

namespace noethops {

/// Differential operator sum_alpha c_alpha * d^alpha, with coefficients in
/// some scalar type C (a residue field element for local dual operators, a
/// polynomial for lifted Noetherian operators).
///
/// No composition is defined; operators only form a module under left scalar
/// multiplication and carry the right action by ring elements implicitly
/// through apply/antidifferentiate. Terms are kept sorted ascending under
/// grevlex on the d-exponents, lowest order first.
template <class C>
class DiffOp {
  public:
    using Term = std::pair<Monomial, C>;

    explicit DiffOp(RingPtr ring) : ring_(std::move(ring)) {}

    static DiffOp monomial(RingPtr ring, Monomial alpha, C c) {
        DiffOp d(std::move(ring));
        if (!c.is_zero()) d.terms_.emplace_back(std::move(alpha), std::move(c));
        return d;
    }
    static DiffOp constant(RingPtr ring, C c) {
        Monomial unit(ring->nvars());
        return monomial(std::move(ring), std::move(unit), std::move(c));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Max |alpha| among the terms; -1 for the zero operator.
    int order() const {
        return terms_.empty() ? -1 : terms_.back().first.degree();
    }

    DiffOp operator-() const {
        DiffOp r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    DiffOp operator+(const DiffOp& o) const { return merged(o, false); }
    DiffOp operator-(const DiffOp& o) const { return merged(o, true); }

    /// Left scalar multiplication.
    DiffOp scaled(const C& c) const {
        DiffOp r(ring_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second = t.second * c;
        return r;
    }

    bool operator==(const DiffOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffOp& o) const { return terms_ != o.terms_; }

    /// Lowest d-monomial with nonzero coefficient (the echelon pivot slot).
    const Monomial& lowest_monomial() const {
        if (terms_.empty()) throw PreconditionError("lowest term of the zero operator");
        return terms_.front().first;
    }

    template <class F>
    DiffOp<std::invoke_result_t<F, const C&>> map_coeffs(const RingPtr& ring, F f) const {
        DiffOp<std::invoke_result_t<F, const C&>> r(ring);
        for (const auto& t : terms_) {
            auto c = f(t.second);
            if (!c.is_zero()) r.push_term_sorted(t.first, std::move(c));
        }
        return r;
    }

    // Internal: append a term already known to be in ascending position.
    template <class C2>
    friend class DiffOp;
    void push_term_sorted(const Monomial& alpha, C c) { terms_.emplace_back(alpha, std::move(c)); }

  private:
    RingPtr ring_;
    std::vector<Term> terms_;

    static bool before(const Monomial& a, const Monomial& b) {
        static const MonomialOrder g = MonomialOrder::grevlex();
        return g.compare(a, b) < 0;
    }

    DiffOp merged(const DiffOp& o, bool subtract) const {
        DiffOp r(ring_);
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (before(terms_[i].first, o.terms_[j].first)) {
                r.terms_.push_back(terms_[i++]);
            } else if (before(o.terms_[j].first, terms_[i].first)) {
                const auto& t = o.terms_[j++];
                r.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
            } else {
                C c = subtract ? terms_[i].second - o.terms_[j].second
                               : terms_[i].second + o.terms_[j].second;
                if (!c.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) {
            const auto& t = o.terms_[j];
            r.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
        }
        return r;
    }
};

/// Formal derivative of D with respect to the symbol d_i. By the
/// multiplication/derivation identity this is right multiplication of D by
/// (x_i - p_i) at a rational point p.
template <class C>
DiffOp<C> antidifferentiate(const DiffOp<C>& D, size_t i) {
    DiffOp<C> r(D.ring());
    for (const auto& t : D.terms()) {
        int k = t.first.e[i];
        if (k == 0) continue;
        Monomial m = t.first;
        m.e[i] -= 1;
        r.push_term_sorted(m, t.second.times_int(k));
    }
    return r;  // d/d(d_i) preserves the relative grevlex order of survivors
}

}  // namespace noethops

#endif
