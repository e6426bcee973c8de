#ifndef INVSTAB_POLYNOMIAL_HPP
#define INVSTAB_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "invstab/errors.hpp"
#include "invstab/scalars.hpp"

namespace invstab {

// Dense univariate polynomial over an exact coefficient ring R. All
// operations go through a ring object so field contexts stay external to
// the element type. Invariant: empty coefficient vector is the zero
// polynomial, otherwise the highest-index coefficient is nonzero.
template <class R>
struct Poly {
    using Elem = typename R::Elem;
    std::vector<Elem> c;  // c[i] is the coefficient of z^i

    long deg() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

template <class R>
void poly_trim(const R& r, Poly<R>& f) {
    while (!f.c.empty() && r.is_zero(f.c.back())) f.c.pop_back();
}

template <class R>
Poly<R> poly_from(const R& r, std::vector<typename R::Elem> coeffs) {
    Poly<R> f{std::move(coeffs)};
    poly_trim(r, f);
    return f;
}

template <class R>
Poly<R> poly_zero(const R&) {
    return Poly<R>{};
}

template <class R>
Poly<R> poly_const(const R& r, typename R::Elem a) {
    Poly<R> f;
    if (!r.is_zero(a)) f.c.push_back(std::move(a));
    return f;
}

template <class R>
Poly<R> poly_monomial(const R& r, typename R::Elem a, size_t n) {
    Poly<R> f;
    if (!r.is_zero(a)) {
        f.c.assign(n + 1, r.zero());
        f.c[n] = std::move(a);
    }
    return f;
}

template <class R>
typename R::Elem poly_coeff(const R& r, const Poly<R>& f, size_t i) {
    return i < f.c.size() ? f.c[i] : r.zero();
}

template <class R>
typename R::Elem poly_lc(const R& r, const Poly<R>& f) {
    return f.is_zero() ? r.zero() : f.c.back();
}

template <class R>
bool poly_eq(const R& r, const Poly<R>& f, const Poly<R>& g) {
    if (f.c.size() != g.c.size()) return false;
    for (size_t i = 0; i < f.c.size(); ++i)
        if (!r.eq(f.c[i], g.c[i])) return false;
    return true;
}

template <class R>
Poly<R> poly_add(const R& r, const Poly<R>& f, const Poly<R>& g) {
    Poly<R> h;
    h.c.resize(std::max(f.c.size(), g.c.size()), r.zero());
    for (size_t i = 0; i < h.c.size(); ++i)
        h.c[i] = r.add(poly_coeff(r, f, i), poly_coeff(r, g, i));
    poly_trim(r, h);
    return h;
}

template <class R>
Poly<R> poly_neg(const R& r, const Poly<R>& f) {
    Poly<R> h = f;
    for (auto& e : h.c) e = r.neg(e);
    return h;
}

template <class R>
Poly<R> poly_sub(const R& r, const Poly<R>& f, const Poly<R>& g) {
    return poly_add(r, f, poly_neg(r, g));
}

template <class R>
Poly<R> poly_scale(const R& r, const Poly<R>& f, const typename R::Elem& a) {
    if (r.is_zero(a)) return Poly<R>{};
    Poly<R> h = f;
    for (auto& e : h.c) e = r.mul(e, a);
    poly_trim(r, h);
    return h;
}

template <class R>
Poly<R> poly_mul(const R& r, const Poly<R>& f, const Poly<R>& g) {
    if (f.is_zero() || g.is_zero()) return Poly<R>{};
    Poly<R> h;
    h.c.assign(f.c.size() + g.c.size() - 1, r.zero());
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (r.is_zero(f.c[i])) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            h.c[i + j] = r.add(h.c[i + j], r.mul(f.c[i], g.c[j]));
    }
    poly_trim(r, h);
    return h;
}

template <class R>
Poly<R> poly_pow(const R& r, Poly<R> base, uint64_t e) {
    Poly<R> acc = poly_const(r, r.one());
    while (e > 0) {
        if (e & 1) acc = poly_mul(r, acc, base);
        e >>= 1;
        if (e) base = poly_mul(r, base, base);
    }
    return acc;
}

template <class R>
typename R::Elem poly_eval(const R& r, const Poly<R>& f, const typename R::Elem& x) {
    typename R::Elem acc = r.zero();
    for (size_t i = f.c.size(); i-- > 0;) acc = r.add(r.mul(acc, x), f.c[i]);
    return acc;
}

// f(g(z))
template <class R>
Poly<R> poly_compose(const R& r, const Poly<R>& f, const Poly<R>& g) {
    Poly<R> acc;
    for (size_t i = f.c.size(); i-- > 0;)
        acc = poly_add(r, poly_mul(r, acc, g), poly_const(r, f.c[i]));
    return acc;
}

template <class R>
Poly<R> poly_derivative(const R& r, const Poly<R>& f) {
    Poly<R> h;
    if (f.c.size() <= 1) return h;
    h.c.resize(f.c.size() - 1, r.zero());
    for (size_t i = 1; i < f.c.size(); ++i)
        h.c[i - 1] = r.mul(f.c[i], r.from_int(static_cast<int64_t>(i)));
    poly_trim(r, h);
    return h;
}

// Euclidean division over a field: f = q*g + rem with deg rem < deg g.
template <class R>
std::pair<Poly<R>, Poly<R>> poly_divmod(const R& r, const Poly<R>& f, const Poly<R>& g) {
    if (g.is_zero()) throw division_by_zero("poly_divmod: division by zero polynomial");
    Poly<R> q, rem = f;
    const auto lc_inv = r.inv(g.c.back());
    const long dg = g.deg();
    if (rem.deg() >= dg) q.c.assign(rem.c.size() - g.c.size() + 1, r.zero());
    while (!rem.is_zero() && rem.deg() >= dg) {
        const long shift = rem.deg() - dg;
        const auto coef = r.mul(rem.c.back(), lc_inv);
        q.c[shift] = coef;
        for (long i = 0; i <= dg; ++i) {
            rem.c[shift + i] = r.sub(rem.c[shift + i], r.mul(coef, g.c[i]));
        }
        poly_trim(r, rem);
    }
    poly_trim(r, q);
    return {q, rem};
}

template <class R>
Poly<R> poly_mod(const R& r, const Poly<R>& f, const Poly<R>& g) {
    return poly_divmod(r, f, g).second;
}

// Exact quotient; throws if the division leaves a remainder.
template <class R>
Poly<R> poly_div_exact(const R& r, const Poly<R>& f, const Poly<R>& g) {
    auto [q, rem] = poly_divmod(r, f, g);
    if (!rem.is_zero()) throw invalid_input("poly_div_exact: inexact division");
    return q;
}

template <class R>
Poly<R> poly_make_monic(const R& r, const Poly<R>& f) {
    if (f.is_zero()) return f;
    return poly_scale(r, f, r.inv(f.c.back()));
}

// Monic gcd over a field via the Euclidean algorithm.
template <class R>
Poly<R> poly_gcd(const R& r, Poly<R> f, Poly<R> g) {
    if (f.is_zero() && g.is_zero())
        throw invalid_input("poly_gcd: gcd(0, 0) is undefined");
    while (!g.is_zero()) {
        auto rem = poly_mod(r, f, g);
        f = std::move(g);
        g = std::move(rem);
    }
    return poly_make_monic(r, f);
}

// base^e mod m over a field, e an arbitrary-precision nonnegative exponent.
template <class R>
Poly<R> poly_powmod(const R& r, Poly<R> base, const Int& e, const Poly<R>& m) {
    Poly<R> acc = poly_mod(r, poly_const(r, r.one()), m);
    base = poly_mod(r, base, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (sgn(e) == 0) return acc;
    for (size_t i = bits; i-- > 0;) {
        acc = poly_mod(r, poly_mul(r, acc, acc), m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            acc = poly_mod(r, poly_mul(r, acc, base), m);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Concrete coefficient rings.

struct IntRing {
    using Elem = Int;
    Elem zero() const { return Int(0); }
    Elem one() const { return Int(1); }
    Elem from_int(int64_t a) const { return Int(static_cast<long>(a)); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    uint64_t characteristic() const { return 0; }
};

struct RatRing {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(int64_t a) const { return Rat(static_cast<long>(a)); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw division_by_zero("RatRing::inv(0)");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    uint64_t characteristic() const { return 0; }
};

using QPoly = Poly<RatRing>;
using ZPoly = Poly<IntRing>;

// Q[t] as a coefficient ring (elements are polynomials in t). Units are the
// nonzero rationals.
struct RatPolyRing {
    using Elem = QPoly;
    RatRing base;
    Elem zero() const { return QPoly{}; }
    Elem one() const { return poly_const(base, Rat(1)); }
    Elem from_int(int64_t a) const { return poly_const(base, Rat(static_cast<long>(a))); }
    Elem add(const Elem& a, const Elem& b) const { return poly_add(base, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly_sub(base, a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return poly_mul(base, a, b); }
    Elem neg(const Elem& a) const { return poly_neg(base, a); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return poly_eq(base, a, b); }
    uint64_t characteristic() const { return 0; }
};

// ---------------------------------------------------------------------------
// Characteristic-zero algorithms over Q.

struct SquarefreeDecomposition {
    Rat unit;
    std::vector<std::pair<QPoly, int>> parts;  // (monic squarefree factor, multiplicity)
};

// Yun's algorithm. f = unit * prod parts_i ^ mult_i with the parts monic,
// squarefree and pairwise coprime. f must be nonzero.
SquarefreeDecomposition yun_squarefree(const QPoly& f);

// Number of distinct roots of f in the algebraic closure:
// deg(f / gcd(f, f')). f must be nonzero.
long n0_distinct_roots(const QPoly& f);

// True iff f = u * g^p with u a nonzero rational. Decided by divisibility
// of every multiplicity in the squarefree decomposition. Optional outputs:
// the unit u and a root g.
bool is_pth_power_up_to_unit_ft(const QPoly& f, uint64_t p,
                                Rat* unit_out = nullptr, QPoly* root_out = nullptr);

// Same decomposition test for arbitrary k >= 1 (no primality requirement).
bool poly_is_kth_power_up_to_unit(const QPoly& f, uint64_t k,
                                  Rat* unit_out = nullptr, QPoly* root_out = nullptr);

// Checks max{deg a, deg b, deg c} <= n0(abc) - 1 for a coprime triple with
// a + b = c, not all constant. Throws invalid_input naming the violated
// precondition.
bool mason_stothers_check(const QPoly& a, const QPoly& b, const QPoly& c);

// Clears denominators and content: returns the primitive integer polynomial
// g and the rational content cont with f = cont * g. f must be nonzero.
std::pair<ZPoly, Rat> to_primitive_int(const QPoly& f);

QPoly qpoly_from_int_coeffs(const std::vector<long>& coeffs);

}  // namespace invstab

#endif
