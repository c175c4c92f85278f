// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_RESIDUE_HPP
#define NOETHOPS_RESIDUE_HPP

#include <memory>
#include <utility>
#include <vector>

#include "noethops/field_traits.hpp"
#include "noethops/groebner.hpp"
#include "noethops/linalg.hpp"

namespace noethops {

template <class K>
class ResidueElem;

/// Residue field kappa(m) = R/m for a maximal ideal m.
///
/// Elements are stored as unique normal forms against the cached grevlex
/// basis of m, expressed over the finite standard monomial basis (whose
/// first element is always 1). Maximality itself is a trusted input; what is
/// verified is the finite-dimension surrogate, and inversion fails loudly on
/// zero divisors if the input was not actually maximal.
template <class K>
class ResidueField : public std::enable_shared_from_this<ResidueField<K>> {
  public:
    static std::shared_ptr<const ResidueField> make(Ideal<K> m) {
        auto f = std::shared_ptr<ResidueField>(new ResidueField(std::move(m)));
        return f;
    }

    const Ideal<K>& ideal() const { return m_; }
    const RingPtr& ring() const { return m_.ring(); }
    /// Vector space dimension of kappa over the base field K.
    size_t degree() const { return basis_.monomials.size(); }
    const std::vector<Monomial>& basis() const { return basis_.monomials; }

    ResidueElem<K> cls(const Poly<K>& f) const;
    ResidueElem<K> zero() const;
    ResidueElem<K> one() const;
    ResidueElem<K> from_base(const K& c) const;

    /// Coordinates of an element over the standard monomial basis.
    std::vector<K> coords(const ResidueElem<K>& a) const;

    ResidueElem<K> invert(const ResidueElem<K>& a) const;

    /// Multiplicative unit of the base field K, with context attached.
    const K& base_one() const { return base_one_; }
    K base_zero() const { return base_one_ - base_one_; }

  private:
    explicit ResidueField(Ideal<K> m)
        : m_(std::move(m)), base_one_(FieldTraits<K>::one(m_.ring())) {
        basis_ = quotient_basis(m_);
        if (!basis_.finite)
            throw PreconditionError("residue field: ideal is not zero-dimensional (not maximal)");
        if (basis_.monomials.empty())
            throw PreconditionError("residue field: unit ideal has no residue field");
    }

    Ideal<K> m_;
    StandardMonomialSet basis_;
    K base_one_;
};

template <class K>
class ResidueElem {
  public:
    ResidueElem(std::shared_ptr<const ResidueField<K>> fld, Poly<K> nf)
        : fld_(std::move(fld)), nf_(std::move(nf)) {}

    const Poly<K>& rep() const { return nf_; }
    const std::shared_ptr<const ResidueField<K>>& field() const { return fld_; }

    bool is_zero() const { return nf_.is_zero(); }
    bool is_one() const { return nf_.is_constant() && !nf_.is_zero() && nf_.leading_coeff().is_one(); }

    ResidueElem operator-() const { return ResidueElem(fld_, -nf_); }
    ResidueElem operator+(const ResidueElem& o) const {
        check(o);
        return ResidueElem(fld_, nf_ + o.nf_);
    }
    ResidueElem operator-(const ResidueElem& o) const {
        check(o);
        return ResidueElem(fld_, nf_ - o.nf_);
    }
    ResidueElem operator*(const ResidueElem& o) const {
        check(o);
        return ResidueElem(fld_, normal_form(nf_ * o.nf_, fld_->ideal()));
    }
    ResidueElem operator/(const ResidueElem& o) const { return *this * fld_->invert(o); }
    ResidueElem& operator+=(const ResidueElem& o) { return *this = *this + o; }

    ResidueElem times_int(long n) const { return ResidueElem(fld_, nf_.times_int(n)); }

    bool operator==(const ResidueElem& o) const { return nf_ == o.nf_; }
    bool operator!=(const ResidueElem& o) const { return nf_ != o.nf_; }

  private:
    void check(const ResidueElem& o) const {
        if (fld_ != o.fld_ && !same_ring(fld_->ring(), o.fld_->ring()))
            throw RingMismatchError("residue elements from different fields");
    }

    std::shared_ptr<const ResidueField<K>> fld_;
    Poly<K> nf_;
};

template <class K>
ResidueElem<K> ResidueField<K>::cls(const Poly<K>& f) const {
    return ResidueElem<K>(this->shared_from_this(), normal_form(f, m_));
}

template <class K>
ResidueElem<K> ResidueField<K>::zero() const {
    return ResidueElem<K>(this->shared_from_this(), Poly<K>::zero(ring()));
}

template <class K>
ResidueElem<K> ResidueField<K>::one() const {
    return ResidueElem<K>(this->shared_from_this(), Poly<K>::constant(ring(), base_one_));
}

template <class K>
ResidueElem<K> ResidueField<K>::from_base(const K& c) const {
    return ResidueElem<K>(this->shared_from_this(), Poly<K>::constant(ring(), c));
}

template <class K>
std::vector<K> ResidueField<K>::coords(const ResidueElem<K>& a) const {
    std::vector<K> out;
    out.reserve(degree());
    K zero_c = base_one_ - base_one_;
    for (const auto& b : basis_.monomials) {
        const K* c = a.rep().coeff(b);
        out.push_back(c ? *c : zero_c);
    }
    return out;
}

/// Inversion by solving the finite linear system (mult-by-a) x = 1 over K.
template <class K>
ResidueElem<K> ResidueField<K>::invert(const ResidueElem<K>& a) const {
    if (a.is_zero()) throw PreconditionError("inverting zero residue class");
    const size_t n = degree();
    K zero_c = base_one_ - base_one_;
    LinAlg<K> la(zero_c, base_one_);
    std::vector<std::vector<K>> m(n, std::vector<K>(n, zero_c));
    for (size_t j = 0; j < n; ++j) {
        Poly<K> bj = Poly<K>::monomial(ring(), basis_.monomials[j], base_one_);
        ResidueElem<K> col = cls(a.rep() * bj);
        std::vector<K> cc = coords(col);
        for (size_t i = 0; i < n; ++i) m[i][j] = cc[i];
    }
    std::vector<K> rhs(n, zero_c);
    rhs[0] = base_one_;  // basis_[0] is the monomial 1
    auto x = la.solve(std::move(m), rhs);
    if (!x) throw PreconditionError("residue class is a zero divisor: ideal not maximal");
    Poly<K> rep = Poly<K>::zero(ring());
    for (size_t j = 0; j < n; ++j)
        rep = rep + Poly<K>::monomial(ring(), basis_.monomials[j], (*x)[j]);
    return ResidueElem<K>(this->shared_from_this(), std::move(rep));
}

}  // namespace noethops

#endif
