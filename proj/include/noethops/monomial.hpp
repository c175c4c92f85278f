// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_MONOMIAL_HPP
#define NOETHOPS_MONOMIAL_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "noethops/errors.hpp"

namespace noethops {

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ring context: the ordered list of variable names, plus (for localized
/// rings K(t)[y]) the ring of the t-variables living inside the coefficient
/// field. coeff is null when the coefficients are plain rationals.
struct Ring {
    std::vector<std::string> vars;
    RingPtr coeff;

    size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
    bool operator==(const Ring& o) const {
        if (vars != o.vars) return false;
        if (!coeff && !o.coeff) return true;
        return coeff && o.coeff && *coeff == *o.coeff;
    }
};

inline RingPtr make_ring(std::vector<std::string> vars, RingPtr coeff = nullptr) {
    return std::make_shared<Ring>(Ring{std::move(vars), std::move(coeff)});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Exponent vector of a power product; length equals the ring's variable count.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(e);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    /// Quotient this / o; caller must ensure o.divides(*this).
    Monomial operator/(const Monomial& o) const {
        Monomial r(e);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.e);
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    static Monomial unit(size_t n) { return Monomial(n); }
    static Monomial var(size_t n, size_t i, int power = 1) {
        Monomial r(n);
        r.e[i] = power;
        return r;
    }
};

/// Total multiplicative well-order on monomials.
///
/// kinds: lex, grevlex, and an elimination block order (first `block`
/// comparison positions grevlex, then the rest grevlex). An optional
/// permutation remaps comparison positions onto variable indices, so any
/// variable subset can be eliminated without rebuilding the ring.
struct MonomialOrder {
    enum class Kind { Lex, Grevlex, Block };
    Kind kind = Kind::Grevlex;
    int block = 0;
    std::vector<int> perm;  // empty = identity; comparison slot j reads e[perm[j]]

    static MonomialOrder lex() { return MonomialOrder{Kind::Lex, 0, {}}; }
    static MonomialOrder grevlex() { return MonomialOrder{Kind::Grevlex, 0, {}}; }
    static MonomialOrder elim(int block_size, std::vector<int> permutation = {}) {
        return MonomialOrder{Kind::Block, block_size, std::move(permutation)};
    }

    /// -1 if u < v, 0 if equal, +1 if u > v.
    int compare(const Monomial& u, const Monomial& v) const {
        if (u.e.size() != v.e.size())
            throw RingMismatchError("monomial_compare: exponent length mismatch");
        const size_t n = u.e.size();
        auto at = [&](const Monomial& m, size_t j) { return perm.empty() ? m.e[j] : m.e[perm[j]]; };
        switch (kind) {
            case Kind::Lex: {
                for (size_t j = 0; j < n; ++j) {
                    int a = at(u, j), b = at(v, j);
                    if (a != b) return a > b ? 1 : -1;
                }
                return 0;
            }
            case Kind::Grevlex:
                return grevlex_range(u, v, 0, n, at);
            case Kind::Block: {
                size_t k = std::min<size_t>(static_cast<size_t>(block), n);
                int c = grevlex_range(u, v, 0, k, at);
                if (c != 0) return c;
                return grevlex_range(u, v, k, n, at);
            }
        }
        return 0;
    }

    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }

    /// Stable identity of the order, used as a cache key.
    std::string key() const {
        std::string s = kind == Kind::Lex ? "lex" : kind == Kind::Grevlex ? "grevlex" : "block";
        if (kind == Kind::Block) s += ":" + std::to_string(block);
        for (int p : perm) s += "," + std::to_string(p);
        return s;
    }

  private:
    template <class At>
    static int grevlex_range(const Monomial& u, const Monomial& v, size_t lo, size_t hi, At at) {
        long du = 0, dv = 0;
        for (size_t j = lo; j < hi; ++j) {
            du += at(u, j);
            dv += at(v, j);
        }
        if (du != dv) return du > dv ? 1 : -1;
        for (size_t j = hi; j-- > lo;) {
            int a = at(u, j), b = at(v, j);
            if (a != b) return a < b ? 1 : -1;  // reverse lex: smaller tail exponent wins
        }
        return 0;
    }
};

}  // namespace noethops

#endif
