// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_RATFUNC_HPP
#define NOETHOPS_RATFUNC_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noethops/polynomial.hpp"

namespace noethops {

// ---------------------------------------------------------------------------
// Exact division and gcd machinery over QQ[t1..tk], as far as rational
// function reduction needs it and no further.
// ---------------------------------------------------------------------------

/// Exact quotient a/b, or nullopt if b does not divide a. Works over any
/// coefficient field via repeated leading-term cancellation.
template <class K>
std::optional<Poly<K>> try_divide_exact(const Poly<K>& a, const Poly<K>& b) {
    a.check_ring(b);
    if (b.is_zero()) throw PreconditionError("exact division by zero polynomial");
    Poly<K> q = Poly<K>::zero(a.ring());
    Poly<K> r = a;
    while (!r.is_zero()) {
        const auto& lt = r.leading_term();
        if (!b.leading_monomial().divides(lt.first)) return std::nullopt;
        Monomial m = lt.first / b.leading_monomial();
        K c = lt.second / b.leading_coeff();
        q = q + Poly<K>::monomial(a.ring(), m, c);
        r = r - b.times_monomial(m, c);
    }
    return q;
}

/// Rational content: c with p = c * primitive(p), where primitive(p) has
/// coprime integer coefficients and positive leading (grevlex) coefficient.
inline Rational rational_content(const Poly<Rational>& p) {
    if (p.is_zero()) return Rational(0);
    mpz_class g = 0, l = 1;
    for (const auto& t : p.terms()) {
        mpz_class num = t.second.numerator();
        mpz_class den = t.second.denominator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    Rational c(mpq_class(g, l));
    if (p.leading_coeff().sign() < 0) c = -c;
    return c;
}

inline Poly<Rational> make_primitive(const Poly<Rational>& p) {
    if (p.is_zero()) return p;
    return p.scaled(rational_content(p).inv());
}

namespace detail {

inline int deg_in_var(const Poly<Rational>& p, size_t v) {
    int d = -1;
    for (const auto& t : p.terms()) d = std::max(d, t.first.e[v]);
    return d;
}

/// Coefficient of v^k, as a polynomial with the v-exponent zeroed.
inline Poly<Rational> v_coeff(const Poly<Rational>& p, size_t v, int k) {
    Poly<Rational> r = Poly<Rational>::zero(p.ring());
    for (const auto& t : p.terms()) {
        if (t.first.e[v] != k) continue;
        Monomial m = t.first;
        m.e[v] = 0;
        r = r + Poly<Rational>::monomial(p.ring(), m, t.second);
    }
    return r;
}

inline int lowest_var_present(const Poly<Rational>& a, const Poly<Rational>& b) {
    size_t n = a.ring()->nvars();
    for (size_t v = 0; v < n; ++v) {
        for (const auto& t : a.terms())
            if (t.first.e[v] > 0) return static_cast<int>(v);
        for (const auto& t : b.terms())
            if (t.first.e[v] > 0) return static_cast<int>(v);
    }
    return -1;
}

}  // namespace detail

Poly<Rational> poly_gcd(const Poly<Rational>& a, const Poly<Rational>& b);

namespace detail {

/// Content of p with respect to variable v: gcd of the v-coefficients.
inline Poly<Rational> v_content(const Poly<Rational>& p, size_t v) {
    Poly<Rational> c = Poly<Rational>::zero(p.ring());
    int d = deg_in_var(p, v);
    for (int k = 0; k <= d; ++k) {
        Poly<Rational> ck = v_coeff(p, v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? make_primitive(ck) : poly_gcd(c, ck);
        if (c.is_constant()) break;
    }
    return c;
}

/// Primitive pseudo-remainder sequence step: remainder of u by w in variable
/// v, normalized to primitive after each elimination to control growth.
inline Poly<Rational> pseudo_rem(Poly<Rational> u, const Poly<Rational>& w, size_t v) {
    int dw = deg_in_var(w, v);
    Poly<Rational> lw = v_coeff(w, v, dw);
    while (!u.is_zero()) {
        int du = deg_in_var(u, v);
        if (du < dw) break;
        Poly<Rational> lu = v_coeff(u, v, du);
        Monomial shift(u.ring()->nvars());
        shift.e[v] = du - dw;
        u = u * lw - w * lu.times_monomial(shift, Rational(1));
        u = make_primitive(u);
    }
    return u;
}

}  // namespace detail

/// gcd over QQ[vars] (recursive primitive PRS). The result is integer-
/// primitive with positive leading coefficient, so it is a canonical
/// representative of the gcd up to units.
inline Poly<Rational> poly_gcd(const Poly<Rational>& a, const Poly<Rational>& b) {
    a.check_ring(b);
    if (a.is_zero()) return make_primitive(b);
    if (b.is_zero()) return make_primitive(a);
    if (a.is_constant() || b.is_constant())
        return Poly<Rational>::constant(a.ring(), Rational(1));
    int vi = detail::lowest_var_present(a, b);
    if (vi < 0) return Poly<Rational>::constant(a.ring(), Rational(1));
    size_t v = static_cast<size_t>(vi);

    Poly<Rational> ca = detail::v_content(a, v);
    Poly<Rational> cb = detail::v_content(b, v);
    Poly<Rational> c = poly_gcd(ca, cb);
    Poly<Rational> pa = *try_divide_exact(a, ca);
    Poly<Rational> pb = *try_divide_exact(b, cb);

    // Euclid on the primitive parts in v.
    Poly<Rational> u = detail::deg_in_var(pa, v) >= detail::deg_in_var(pb, v) ? pa : pb;
    Poly<Rational> w = detail::deg_in_var(pa, v) >= detail::deg_in_var(pb, v) ? pb : pa;
    while (!w.is_zero()) {
        Poly<Rational> r = detail::pseudo_rem(u, w, v);
        u = w;
        w = r.is_zero() ? r : *try_divide_exact(r, detail::v_content(r, v));
    }
    if (detail::deg_in_var(u, v) <= 0) return make_primitive(c);  // coprime in v
    Poly<Rational> g = *try_divide_exact(u, detail::v_content(u, v));
    return make_primitive(c * g);
}

inline Poly<Rational> poly_lcm(const Poly<Rational>& a, const Poly<Rational>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<Rational>::zero(a.ring());
    return make_primitive(*try_divide_exact(a * b, poly_gcd(a, b)));
}

// ---------------------------------------------------------------------------
// QQ(t): rational functions in the free variables.
// ---------------------------------------------------------------------------

/// Element of the fraction field of QQ[t1..tk], kept fully reduced with a
/// monic denominator, so every value has exactly one representation.
class RatFunc {
  public:
    RatFunc(Poly<Rational> num, Poly<Rational> den)
        : num_(std::move(num)), den_(std::move(den)) {
        num_.check_ring(den_);
        if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
        reduce();
    }
    static RatFunc of_poly(Poly<Rational> p) {
        auto one = Poly<Rational>::constant(p.ring(), Rational(1));
        return RatFunc(std::move(p), std::move(one));
    }
    static RatFunc constant(const RingPtr& ring, Rational c) {
        return of_poly(Poly<Rational>::constant(ring, std::move(c)));
    }
    static RatFunc zero(const RingPtr& ring) { return constant(ring, Rational(0)); }
    static RatFunc one(const RingPtr& ring) { return constant(ring, Rational(1)); }

    const Poly<Rational>& num() const { return num_; }
    const Poly<Rational>& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator-() const { return RatFunc(-num_, den_, already_reduced{}); }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw PreconditionError("division by zero in QQ(t)");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inv() const {
        if (is_zero()) throw PreconditionError("inverting zero in QQ(t)");
        return RatFunc(den_, num_);
    }
    RatFunc times_int(long n) const {
        if (n == 0) return zero(ring());
        return RatFunc(num_.times_int(n), den_, already_reduced{});
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

  private:
    struct already_reduced {};
    RatFunc(Poly<Rational> num, Poly<Rational> den, already_reduced)
        : num_(std::move(num)), den_(std::move(den)) {}

    Poly<Rational> num_;
    Poly<Rational> den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<Rational>::constant(num_.ring(), Rational(1));
            return;
        }
        if (!den_.is_constant()) {
            Poly<Rational> g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = *try_divide_exact(num_, g);
                den_ = *try_divide_exact(den_, g);
            }
        }
        Rational lc = den_.leading_coeff().inv();
        num_ = num_.scaled(lc);
        den_ = den_.scaled(lc);
    }
};

// ---------------------------------------------------------------------------
// Content clearing, used by the Groebner engine to tame coefficient growth.
// ---------------------------------------------------------------------------

/// Scale p by a nonzero rational so coefficients become coprime integers with
/// positive leading coefficient.
inline void clear_content(Poly<Rational>& p) {
    if (p.is_zero()) return;
    p = make_primitive(p);
}

/// Scale p by a nonzero element of QQ(t) so every coefficient becomes a
/// polynomial in t, jointly primitive, with a canonical sign.
inline void clear_content(Poly<RatFunc>& p) {
    if (p.is_zero()) return;
    const RingPtr tring = p.terms().front().second.ring();
    Poly<Rational> l = Poly<Rational>::constant(tring, Rational(1));
    for (const auto& t : p.terms()) l = poly_lcm(l, t.second.den());
    Poly<Rational> g = Poly<Rational>::zero(tring);
    std::vector<std::pair<Monomial, Poly<Rational>>> nums;
    nums.reserve(p.nterms());
    for (const auto& t : p.terms()) {
        Poly<Rational> n = t.second.num() * *try_divide_exact(l, t.second.den());
        g = g.is_zero() ? make_primitive(n) : poly_gcd(g, n);
        nums.emplace_back(t.first, std::move(n));
    }
    Rational content(0);
    for (auto& [m, n] : nums) {
        if (!g.is_constant()) n = *try_divide_exact(n, g);
        Rational c = rational_content(n);
        if (content.is_zero()) {
            content = c;
        } else {
            mpz_class gn, ln;
            mpz_gcd(gn.get_mpz_t(), content.numerator().get_mpz_t(), c.numerator().get_mpz_t());
            mpz_lcm(ln.get_mpz_t(), content.denominator().get_mpz_t(),
                    c.denominator().get_mpz_t());
            content = Rational(mpq_class(gn, ln));
        }
    }
    if (nums.front().second.leading_coeff().sign() < 0) content = -content;
    Poly<RatFunc> out(p.ring(), p.order());
    for (auto& [m, n] : nums) {
        RatFunc c = RatFunc::of_poly(n.scaled(content.inv()));
        out = out + Poly<RatFunc>::monomial(p.ring(), m, std::move(c));
    }
    p = std::move(out);
}

}  // namespace noethops

#endif
