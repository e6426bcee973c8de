#ifndef INVSTAB_DYNAMICS_HPP
#define INVSTAB_DYNAMICS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "invstab/finite_field.hpp"
#include "invstab/polynomial.hpp"

namespace invstab {

// Growth guard for exact iteration over characteristic-zero domains; the
// denominators have degree d^n and doubly exponential coefficients.
struct IterateLimits {
    size_t max_total_digits = 1000000;
};

inline size_t coeff_digits(const RatRing&, const Rat& x) {
    return mpz_sizeinbase(x.get_num().get_mpz_t(), 10) +
           mpz_sizeinbase(x.get_den().get_mpz_t(), 10);
}
inline size_t coeff_digits(const IntRing&, const Int& x) {
    return mpz_sizeinbase(x.get_mpz_t(), 10);
}
inline size_t coeff_digits(const FqRing&, const FieldElem&) { return 1; }
inline size_t coeff_digits(const RatPolyRing& r, const QPoly& f) {
    size_t total = 1;
    for (const auto& e : f.c) total += coeff_digits(r.base, e);
    return total;
}

template <class R>
size_t poly_digits(const R& r, const Poly<R>& f) {
    size_t total = 1;
    for (const auto& e : f.c) total += coeff_digits(r, e);
    return total;
}

template <class R>
typename R::Elem elem_pow(const R& r, typename R::Elem base, uint64_t e) {
    auto acc = r.one();
    while (e > 0) {
        if (e & 1) acc = r.mul(acc, base);
        e >>= 1;
        if (e) base = r.mul(base, base);
    }
    return acc;
}

// The reduced n-th iterate of Phi = 1/(z^d + c): coprime pair (f_n, g_n)
// with g_n monic.
template <class R>
struct ReducedIterate {
    int n = 0;
    Poly<R> f;
    Poly<R> g;
};

// Recurrence: f_1 = 1, g_1 = z^d + c, f_{n+1} = g_n^d, g_{n+1} = f_n^d + c g_n^d.
// The pair stays coprime (a common root of f_{n+1} and g_{n+1} would force a
// common root of f_n and g_n); the gcd is asserted where cheap. R must be a
// field ring with characteristic 0 or prime to d.
template <class R>
ReducedIterate<R> iterate_phi(const R& r, uint64_t d, const typename R::Elem& c, int n,
                              const IterateLimits& limits = {}) {
    if (d < 2) throw invalid_input("iterate_phi: d must be >= 2");
    if (n < 1) throw invalid_input("iterate_phi: n must be >= 1");
    if (r.is_zero(c)) throw invalid_input("iterate_phi: c must be nonzero");
    const uint64_t ch = r.characteristic();
    if (ch != 0 && d % ch == 0)
        throw unsupported_characteristic("iterate_phi: char(K) divides d");

    Poly<R> f = poly_const(r, r.one());
    Poly<R> g = poly_add(r, poly_monomial(r, r.one(), static_cast<size_t>(d)),
                          poly_const(r, c));
    for (int step = 2; step <= n; ++step) {
        Poly<R> gd = poly_pow(r, g, d);
        Poly<R> g_next = poly_add(r, poly_pow(r, f, d), poly_scale(r, gd, c));
        f = std::move(gd);
        g = std::move(g_next);
        if (poly_digits(r, g) > limits.max_total_digits)
            throw size_limit_error("iterate_phi: coefficient size guard exceeded at n = " +
                                   std::to_string(step));
        // Coprimality assertion; skipped for large characteristic-zero
        // iterates where the rational Euclid blows up.
        if (ch != 0 || g.deg() <= 32) {
            if (poly_gcd(r, f, g).deg() != 0)
                throw error("iterate_phi: reduced iterate is not coprime");
        }
    }
    // Normalize the denominator monic; f is scaled by the same unit so the
    // rational function is unchanged.
    const auto u = r.inv(poly_lc(r, g));
    ReducedIterate<R> out;
    out.n = n;
    out.f = poly_scale(r, f, u);
    out.g = poly_scale(r, g, u);
    return out;
}

// Forward orbit of infinity: [Phi^{(n)}(infinity)] for n = 1..N as
// normalized projective pairs (X, Y) with Y = 1, or (1, 0) for infinity.
template <class R>
std::vector<std::pair<typename R::Elem, typename R::Elem>> infinity_orbit(
    const R& r, uint64_t d, const typename R::Elem& c, int N) {
    if (d < 2) throw invalid_input("infinity_orbit: d must be >= 2");
    if (r.is_zero(c)) throw invalid_input("infinity_orbit: c must be nonzero");
    const uint64_t ch = r.characteristic();
    if (ch != 0 && d % ch == 0)
        throw unsupported_characteristic("infinity_orbit: char(K) divides d");
    std::vector<std::pair<typename R::Elem, typename R::Elem>> orbit;
    auto a = r.zero();
    auto b = r.one();
    for (int n = 1; n <= N; ++n) {
        orbit.emplace_back(a, b);
        auto ad = elem_pow(r, a, d);
        auto bd = elem_pow(r, b, d);
        a = bd;
        b = r.add(ad, r.mul(c, bd));
        // normalize
        if (!r.is_zero(b)) {
            a = r.mul(a, r.inv(b));
            b = r.one();
        } else {
            a = r.one();
        }
    }
    return orbit;
}

struct PeriodicityResult {
    enum Kind { NotPeriodic, Periodic, CapExceeded } kind = NotPeriodic;
    // For Periodic: the cycle length through infinity. For NotPeriodic: the
    // orbit enters a cycle avoiding infinity after `preperiod` steps.
    uint64_t period = 0;
    uint64_t preperiod = 0;
};

// Detects whether infinity lies on its own forward cycle in P^1(F_q).
// cap = 0 means q + 1 (the phase space size), which makes the scan total.
PeriodicityResult is_infinity_periodic(const FieldCtx& F, uint64_t d, const FieldElem& c,
                                       uint64_t cap = 0);

}  // namespace invstab

#endif
