// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_GROEBNER_HPP
#define NOETHOPS_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "noethops/polynomial.hpp"
#include "noethops/ratfunc.hpp"

namespace noethops {

namespace detail {
template <class K>
struct GBCache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const std::vector<Poly<K>>>> bases;
};
}  // namespace detail

/// Finitely generated ideal. Zero generators are dropped on construction.
/// Reduced Groebner bases are cached per monomial order; the cache is shared
/// between copies and behaves as write-once per (ideal, order).
template <class K>
class Ideal {
  public:
    Ideal(RingPtr ring, std::vector<Poly<K>> gens)
        : ring_(std::move(ring)), cache_(std::make_shared<detail::GBCache<K>>()) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (!same_ring(g.ring(), ring_))
                throw RingMismatchError("ideal generator from a different ring");
            gens_.push_back(std::move(g));
        }
    }
    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly<K>>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    std::shared_ptr<detail::GBCache<K>> cache() const { return cache_; }

  private:
    RingPtr ring_;
    std::vector<Poly<K>> gens_;
    std::shared_ptr<detail::GBCache<K>> cache_;
};

namespace detail {

/// Full reduction of f modulo basis (complete normal form, exact: no
/// rescaling, so reduction is K-linear in f).
template <class K>
Poly<K> reduce_exact(Poly<K> h, const std::vector<Poly<K>>& basis, const MonomialOrder& ord) {
    if (h.order().key() != ord.key()) h = h.reordered(ord);
    Poly<K> r(h.ring(), h.order());
    while (!h.is_zero()) {
        bool hit = false;
        for (const auto& g : basis) {
            if (!g.leading_monomial().divides(h.leading_monomial())) continue;
            Monomial m = h.leading_monomial() / g.leading_monomial();
            K c = h.leading_coeff() / g.leading_coeff();
            h = h - g.times_monomial(m, c);
            hit = true;
            break;
        }
        if (!hit) {
            r = r + Poly<K>::monomial(h.ring(), h.leading_monomial(), h.leading_coeff());
            h = h - Poly<K>::monomial(h.ring(), h.leading_monomial(), h.leading_coeff());
        }
    }
    return r;
}

/// Top-reduction used inside Buchberger: cancel leading terms while some
/// basis leading term divides, content-clearing the whole polynomial after
/// each step (a uniform rescale, so membership of zero is preserved). Stops
/// at the first irreducible leading term; tails are cleaned up by the final
/// interreduction.
template <class K>
Poly<K> top_reduce_scaled(Poly<K> h, const std::vector<Poly<K>>& basis) {
    while (!h.is_zero()) {
        bool hit = false;
        for (const auto& g : basis) {
            if (!g.leading_monomial().divides(h.leading_monomial())) continue;
            Monomial m = h.leading_monomial() / g.leading_monomial();
            K c = h.leading_coeff() / g.leading_coeff();
            h = h - g.times_monomial(m, c);
            clear_content(h);
            hit = true;
            break;
        }
        if (!hit) break;
    }
    return h;
}

template <class K>
Poly<K> s_poly(const Poly<K>& f, const Poly<K>& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Poly<K> a = f.times_monomial(l / f.leading_monomial(), f.leading_coeff().inv());
    Poly<K> b = g.times_monomial(l / g.leading_monomial(), g.leading_coeff().inv());
    return a - b;
}

/// Plain Buchberger with the product (coprime leading term) and chain
/// criteria. Deterministic: pairs are processed by (lcm degree, i, j).
template <class K>
std::vector<Poly<K>> buchberger(std::vector<Poly<K>> basis) {
    using Pair = std::tuple<int, size_t, size_t>;  // (lcm degree, i, j), i < j
    std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> todo;
    std::set<std::pair<size_t, size_t>> done;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            todo.emplace(l.degree(), i, j);
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!todo.empty()) {
        auto [deg, i, j] = todo.top();
        todo.pop();
        (void)deg;
        if (done.count({i, j})) continue;
        done.insert({i, j});
        const Monomial& li = basis[i].leading_monomial();
        const Monomial& lj = basis[j].leading_monomial();
        Monomial l = Monomial::lcm(li, lj);
        if (l == li * lj) continue;  // product criterion
#ifndef NOETHOPS_DISABLE_CHAIN
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].leading_monomial().divides(l)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            chained = done.count({p1.first, p1.second}) && done.count({p2.first, p2.second});
        }
        if (chained) continue;  // chain criterion
#endif
        Poly<K> r = top_reduce_scaled(s_poly(basis[i], basis[j]), basis);
        if (!r.is_zero()) {
            basis.push_back(std::move(r));
            push_pairs(basis.size() - 1);
        }
    }
    return basis;
}

/// Minimalize + interreduce + make monic: the unique reduced basis.
template <class K>
std::vector<Poly<K>> reduce_basis(std::vector<Poly<K>> basis, const MonomialOrder& ord) {
    std::vector<Poly<K>> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& li = basis[i].leading_monomial();
            const Monomial& lj = basis[j].leading_monomial();
            if (lj.divides(li) && !(li == lj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Poly<K>> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<K>> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly<K> r = reduce_exact(minimal[i], others, ord);
        if (!r.is_zero()) out.push_back(r.scaled(r.leading_coeff().inv()));
    }
    std::sort(out.begin(), out.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return out;
}

}  // namespace detail

/// The unique reduced Groebner basis of I for ord (cached). The zero ideal
/// yields an empty basis; a unit ideal yields {1}.
template <class K>
std::shared_ptr<const std::vector<Poly<K>>> groebner_basis(
    const Ideal<K>& I, const MonomialOrder& ord = MonomialOrder::grevlex()) {
    auto cache = I.cache();
    std::lock_guard<std::mutex> lock(cache->mu);
    auto it = cache->bases.find(ord.key());
    if (it != cache->bases.end()) return it->second;

    std::vector<Poly<K>> start;
    for (const auto& g : I.gens()) {
        Poly<K> h = g.reordered(ord);
        clear_content(h);
        start.push_back(std::move(h));
    }
    auto full = detail::buchberger(std::move(start));
    auto reduced =
        std::make_shared<const std::vector<Poly<K>>>(detail::reduce_basis(std::move(full), ord));
    cache->bases.emplace(ord.key(), reduced);
    return reduced;
}

/// Unique normal form of f modulo I: no term of the result is divisible by a
/// leading term of the reduced basis, and NF(f) = 0 iff f is a member.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const Ideal<K>& I,
                    const MonomialOrder& ord = MonomialOrder::grevlex()) {
    if (!same_ring(f.ring(), I.ring()))
        throw RingMismatchError("normal_form: polynomial from a different ring");
    auto gb = groebner_basis(I, ord);
    MonomialOrder keep = f.order();
    Poly<K> r = detail::reduce_exact(f, *gb, ord);
    return r.order().key() == keep.key() ? r : r.reordered(keep);
}

template <class K>
bool ideal_contains(const Ideal<K>& I, const Poly<K>& f) {
    return normal_form(f, I).is_zero();
}

template <class K>
bool is_unit_ideal(const Ideal<K>& I) {
    auto gb = groebner_basis(I);
    return gb->size() == 1 && (*gb)[0].is_constant();
}

/// True iff the reduced grevlex bases coincide.
template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw RingMismatchError("ideal_equal: ideals from different rings");
    auto a = groebner_basis(I);
    auto b = groebner_basis(J);
    if (a->size() != b->size()) return false;
    for (size_t i = 0; i < a->size(); ++i)
        if ((*a)[i] != (*b)[i]) return false;
    return true;
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& I, const Ideal<K>& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw RingMismatchError("ideal_sum: ideals from different rings");
    std::vector<Poly<K>> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return Ideal<K>(I.ring(), std::move(gens));
}

/// I^d by expanding the degree-d products of the generators (d = 0 gives <1>).
template <class K>
Ideal<K> ideal_power(const Ideal<K>& I, int d) {
    if (d < 0) throw PreconditionError("ideal_power: negative exponent");
    if (I.is_zero_ideal()) {
        if (d == 0) throw PreconditionError("ideal_power: <0>^0 needs a unit; unsupported");
        return Ideal<K>::zero(I.ring());
    }
    if (d == 0) {
        const K& c = I.gens()[0].leading_coeff();
        return Ideal<K>(I.ring(), {Poly<K>::constant(I.ring(), c / c)});
    }
    // layer holds degree-k products tagged with the largest generator index
    // used, so each multiset of generators is produced exactly once.
    std::vector<std::pair<Poly<K>, size_t>> layer;
    for (size_t i = 0; i < I.gens().size(); ++i) layer.emplace_back(I.gens()[i], i);
    for (int k = 1; k < d; ++k) {
        std::vector<std::pair<Poly<K>, size_t>> next;
        for (const auto& [p, last] : layer)
            for (size_t i = last; i < I.gens().size(); ++i)
                next.emplace_back(p * I.gens()[i], i);
        layer = std::move(next);
    }
    std::vector<Poly<K>> gens;
    gens.reserve(layer.size());
    for (auto& [p, last] : layer) gens.push_back(std::move(p));
    return Ideal<K>(I.ring(), std::move(gens));
}

namespace detail {

template <class K>
RingPtr extended_ring(const RingPtr& ring, const std::string& tag) {
    std::vector<std::string> vars;
    vars.push_back(tag);
    vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
    return make_ring(std::move(vars));
}

template <class K>
Poly<K> inject_tag(const Poly<K>& f, const RingPtr& ext) {
    Poly<K> r = Poly<K>::zero(ext);
    for (const auto& t : f.terms()) {
        Monomial m(ext->nvars());
        for (size_t i = 0; i < t.first.e.size(); ++i) m.e[i + 1] = t.first.e[i];
        r = r + Poly<K>::monomial(ext, m, t.second);
    }
    return r;
}

template <class K>
std::optional<Poly<K>> project_tag_free(const Poly<K>& f, const RingPtr& base) {
    Poly<K> r = Poly<K>::zero(base);
    for (const auto& t : f.terms()) {
        if (t.first.e[0] != 0) return std::nullopt;
        Monomial m(base->nvars());
        for (size_t i = 0; i < base->nvars(); ++i) m.e[i] = t.first.e[i + 1];
        r = r + Poly<K>::monomial(base, m, t.second);
    }
    return r;
}

}  // namespace detail

/// I ∩ J via a tag variable w on <w·I, (1-w)·J> and elimination of w.
template <class K>
Ideal<K> ideal_intersect(const Ideal<K>& I, const Ideal<K>& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw RingMismatchError("ideal_intersect: ideals from different rings");
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal<K>::zero(I.ring());
    RingPtr ext = detail::extended_ring<K>(I.ring(), "@w");
    const K one_c = I.gens()[0].leading_coeff() / I.gens()[0].leading_coeff();
    Poly<K> w = Poly<K>::variable(ext, 0, one_c);
    Poly<K> one_minus_w = Poly<K>::constant(ext, one_c) - w;
    std::vector<Poly<K>> gens;
    for (const auto& f : I.gens()) gens.push_back(w * detail::inject_tag(f, ext));
    for (const auto& g : J.gens()) gens.push_back(one_minus_w * detail::inject_tag(g, ext));
    Ideal<K> E(ext, std::move(gens));
    auto gb = groebner_basis(E, MonomialOrder::elim(1));
    std::vector<Poly<K>> out;
    for (const auto& f : *gb) {
        auto p = detail::project_tag_free(f, I.ring());
        if (p) out.push_back(std::move(*p));
    }
    return Ideal<K>(I.ring(), std::move(out));
}

/// I : f, computed as the generator-wise exact quotient of I ∩ <f> by f.
template <class K>
Ideal<K> ideal_colon_elt(const Ideal<K>& I, const Poly<K>& f) {
    if (f.is_zero()) throw PreconditionError("ideal colon by the zero element");
    Ideal<K> inter = ideal_intersect(I, Ideal<K>(I.ring(), {f}));
    std::vector<Poly<K>> out;
    for (const auto& g : inter.gens()) {
        auto q = try_divide_exact(g, f);
        if (!q) throw PreconditionError("colon: basis of the intersection not divisible");
        out.push_back(std::move(*q));
    }
    return Ideal<K>(I.ring(), std::move(out));
}

/// I : f^∞ via the Rabinowitsch tag ideal (I + <1 - w f>) ∩ R.
template <class K>
Ideal<K> ideal_saturate_elt(const Ideal<K>& I, const Poly<K>& f) {
    if (f.is_zero()) throw PreconditionError("saturation by the zero element");
    RingPtr ext = detail::extended_ring<K>(I.ring(), "@w");
    const K one_c = f.leading_coeff() / f.leading_coeff();
    Poly<K> w = Poly<K>::variable(ext, 0, one_c);
    std::vector<Poly<K>> gens;
    for (const auto& g : I.gens()) gens.push_back(detail::inject_tag(g, ext));
    gens.push_back(Poly<K>::constant(ext, one_c) - w * detail::inject_tag(f, ext));
    Ideal<K> E(ext, std::move(gens));
    auto gb = groebner_basis(E, MonomialOrder::elim(1));
    std::vector<Poly<K>> out;
    for (const auto& g : *gb) {
        auto p = detail::project_tag_free(g, I.ring());
        if (p) out.push_back(std::move(*p));
    }
    return Ideal<K>(I.ring(), std::move(out));
}

/// I : J^∞ = ∩_{g in gens(J)} I : g^∞ (any power of J is generated by
/// products with a large power of one of the generators).
template <class K>
Ideal<K> ideal_saturate(const Ideal<K>& I, const Ideal<K>& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw RingMismatchError("ideal_saturate: ideals from different rings");
    if (J.is_zero_ideal()) {
        // I : 0^∞ = R
        if (I.is_zero_ideal()) throw PreconditionError("saturation of <0> by <0>");
        const K one_c = I.gens()[0].leading_coeff() / I.gens()[0].leading_coeff();
        return Ideal<K>(I.ring(), {Poly<K>::constant(I.ring(), one_c)});
    }
    bool first = true;
    Ideal<K> acc = Ideal<K>::zero(I.ring());
    for (const auto& g : J.gens()) {
        Ideal<K> s = ideal_saturate_elt(I, g);
        acc = first ? s : ideal_intersect(acc, s);
        first = false;
    }
    return acc;
}

/// Monomials outside the leading term ideal of a Groebner basis.
struct StandardMonomialSet {
    bool finite = false;
    std::vector<Monomial> monomials;  // ascending grevlex when finite
    size_t dimension() const { return monomials.size(); }
};

/// K-vector space dimension of R/I and its standard monomial basis.
/// Infinite quotients are detected by a missing pure power among the leading
/// terms and reported with the finite flag cleared.
template <class K>
StandardMonomialSet quotient_basis(const Ideal<K>& I,
                                   const MonomialOrder& ord = MonomialOrder::grevlex()) {
    auto gb = groebner_basis(I, ord);
    StandardMonomialSet out;
    const size_t n = I.ring()->nvars();
    std::vector<Monomial> lts;
    for (const auto& g : *gb) lts.push_back(g.leading_monomial());
    for (const auto& lt : lts)
        if (lt.is_one()) {  // unit ideal: R/I = 0
            out.finite = true;
            return out;
        }
    for (size_t i = 0; i < n; ++i) {
        bool pure = false;
        for (const auto& lt : lts) {
            bool only_i = lt.e[i] > 0;
            for (size_t j = 0; j < n && only_i; ++j)
                if (j != i && lt.e[j] > 0) only_i = false;
            if (only_i) {
                pure = true;
                break;
            }
        }
        if (!pure) return out;  // some variable has no pure power: infinite
    }
    out.finite = true;
    // Enumerate standard monomials breadth-first from 1.
    std::set<std::vector<int>> seen;
    std::vector<Monomial> stack{Monomial(n)};
    seen.insert(stack[0].e);
    while (!stack.empty()) {
        Monomial m = stack.back();
        stack.pop_back();
        bool divisible = false;
        for (const auto& lt : lts)
            if (lt.divides(m)) {
                divisible = true;
                break;
            }
        if (divisible) continue;
        out.monomials.push_back(m);
        for (size_t i = 0; i < n; ++i) {
            Monomial next = m;
            next.e[i] += 1;
            if (seen.insert(next.e).second) stack.push_back(next);
        }
    }
    MonomialOrder g = MonomialOrder::grevlex();
    std::sort(out.monomials.begin(), out.monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return g.compare(a, b) < 0; });
    return out;
}

}  // namespace noethops

#endif
