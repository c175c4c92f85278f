// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_POLYNOMIAL_HPP
#define NOETHOPS_POLYNOMIAL_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "noethops/monomial.hpp"
#include "noethops/rational.hpp"

namespace noethops {

/// Multivariate polynomial over an exact coefficient field K.
///
/// K must provide field arithmetic (+, -, *, /), unary minus, ==, is_zero(),
/// and times_int(long). Terms are stored sorted strictly descending under the
/// polynomial's monomial order; no zero coefficients are kept, so equal
/// polynomials have identical representations.
template <class K>
class Poly {
  public:
    using Term = std::pair<Monomial, K>;

    Poly(RingPtr ring, MonomialOrder ord = MonomialOrder::grevlex())
        : ring_(std::move(ring)), ord_(std::move(ord)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, K c) {
        Poly p(std::move(ring));
        if (!c.is_zero()) p.terms_.emplace_back(Monomial(p.ring_->nvars()), std::move(c));
        return p;
    }
    static Poly monomial(RingPtr ring, Monomial m, K c) {
        Poly p(std::move(ring));
        if (m.e.size() != p.ring_->nvars())
            throw RingMismatchError("monomial length does not match ring");
        if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
        return p;
    }
    static Poly variable(RingPtr ring, size_t i, const K& one_val) {
        Monomial m(ring->nvars());
        m.e[i] = 1;
        return monomial(std::move(ring), std::move(m), one_val);
    }

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
    }

    int degree() const {  // total degree; -1 for the zero polynomial
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.first.degree());
        return d;
    }

    const Monomial& leading_monomial() const {
        require_nonzero();
        return terms_.front().first;
    }
    const K& leading_coeff() const {
        require_nonzero();
        return terms_.front().second;
    }
    const Term& leading_term() const {
        require_nonzero();
        return terms_.front();
    }
    /// Coefficient of m, or nullptr.
    const K* coeff(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.first == m) return &t.second;
        return nullptr;
    }

    /// Copy with terms re-sorted under a different order.
    Poly reordered(const MonomialOrder& ord) const {
        Poly r(ring_, ord);
        r.terms_ = terms_;
        r.sort_terms();
        return r;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    Poly operator+(const Poly& o) const { return merged(o, false); }
    Poly operator-(const Poly& o) const { return merged(o, true); }

    Poly operator*(const Poly& o) const {
        check_ring(o);
        Poly r(ring_, ord_);
        if (is_zero() || o.is_zero()) return r;
        r.terms_.reserve(terms_.size() * o.terms_.size());
        for (const auto& ta : terms_)
            for (const auto& tb : o.terms_) {
                K c = ta.second * tb.second;
                if (!c.is_zero()) r.terms_.emplace_back(ta.first * tb.first, std::move(c));
            }
        r.sort_terms();
        r.combine_sorted();
        return r;
    }

    Poly scaled(const K& c) const {
        Poly r(ring_, ord_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second = t.second * c;
        return r;
    }
    Poly times_int(long n) const {
        Poly r(ring_, ord_);
        if (n == 0) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second = t.second.times_int(n);
        return r;
    }
    Poly times_monomial(const Monomial& m, const K& c) const {
        Poly r(ring_, ord_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) {
            t.first = t.first * m;
            t.second = t.second * c;
        }
        return r;  // multiplicativity of the order keeps the sorting valid
    }

    /// Formal partial derivative with respect to variable i.
    Poly derivative(size_t i) const {
        Poly r(ring_, ord_);
        for (const auto& t : terms_) {
            int k = t.first.e[i];
            if (k == 0) continue;
            Monomial m = t.first;
            m.e[i] -= 1;
            r.terms_.emplace_back(std::move(m), t.second.times_int(k));
        }
        return r;  // derivative preserves relative order of surviving terms
    }

    bool operator==(const Poly& o) const {
        if (!same_ring(ring_, o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        if (ord_.key() == o.ord_.key()) return terms_ == o.terms_;
        return (*this - o).is_zero();
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void check_ring(const Poly& o) const {
        if (!same_ring(ring_, o.ring_))
            throw RingMismatchError("polynomial arithmetic across different rings");
    }

  private:
    RingPtr ring_;
    MonomialOrder ord_;
    std::vector<Term> terms_;

    void require_nonzero() const {
        if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [this](const Term& a, const Term& b) { return ord_.compare(a.first, b.first) > 0; });
    }

    void combine_sorted() {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first) {
                out.back().second += t.second;
                if (out.back().second.is_zero()) out.pop_back();
            } else {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    Poly merged(const Poly& o, bool subtract) const {
        check_ring(o);
        const Poly* b = &o;
        Poly tmp(ring_);
        if (o.ord_.key() != ord_.key()) {
            tmp = o.reordered(ord_);
            b = &tmp;
        }
        Poly r(ring_, ord_);
        r.terms_.reserve(terms_.size() + b->terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < b->terms_.size()) {
            int c = ord_.compare(terms_[i].first, b->terms_[j].first);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                const auto& t = b->terms_[j++];
                r.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
            } else {
                K c2 = subtract ? terms_[i].second - b->terms_[j].second
                                : terms_[i].second + b->terms_[j].second;
                if (!c2.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(c2));
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < b->terms_.size(); ++j) {
            const auto& t = b->terms_[j];
            r.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
        }
        return r;
    }
};

/// a op b with an explicit ring-context check, mirroring the library's
/// error contract for the arithmetic entry points.
template <class K>
Poly<K> poly_arith(const Poly<K>& a, const Poly<K>& b, char op) {
    a.check_ring(b);
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        default: throw PreconditionError("poly_arith: unknown operation");
    }
}

}  // namespace noethops

#endif
