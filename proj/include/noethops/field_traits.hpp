// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_FIELD_TRAITS_HPP
#define NOETHOPS_FIELD_TRAITS_HPP

#include "noethops/ratfunc.hpp"

namespace noethops {

/// How to fabricate scalar constants of the coefficient field of a ring,
/// needed where no nonzero element is at hand (zero ideals, empty bases).
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational one(const RingPtr&) { return Rational(1); }
};

template <>
struct FieldTraits<RatFunc> {
    static RatFunc one(const RingPtr& ring) {
        if (!ring->coeff)
            throw PreconditionError("ring has no rational-function coefficient context");
        return RatFunc::one(ring->coeff);
    }
};

}  // namespace noethops

#endif
