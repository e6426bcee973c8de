#ifndef INVSTAB_NORM_SEQUENCE_HPP
#define INVSTAB_NORM_SEQUENCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "invstab/dynamics.hpp"
#include "invstab/finite_field.hpp"
#include "invstab/polynomial.hpp"

namespace invstab {

// 2x2 matrix state over a generic ring. Starting from [[c, -1], [1, 0]],
// each entry pair evolves by v' = (-1)^d c v^d + w^d, w' = (-1)^{d+1} v^d.
// The top-left entries x_j are the terms whose consecutive ratios decide
// inverse stability; the bottom row satisfies z_{j+1} = (-1)^d x_j.
template <class R>
struct MatState {
    int j = 1;
    typename R::Elem x, y, z, w;
};

template <class R>
typename R::Elem seq_sign(const R& r, uint64_t d) {
    return d % 2 == 0 ? r.one() : r.neg(r.one());
}

template <class R>
MatState<R> mat_initial(const R& r, const typename R::Elem& c) {
    return MatState<R>{1, c, r.neg(r.one()), r.one(), r.zero()};
}

template <class R>
MatState<R> mat_next(const R& r, const MatState<R>& s, uint64_t d, const typename R::Elem& c) {
    const auto sign = seq_sign(r, d);
    const auto xd = elem_pow(r, s.x, d);
    const auto yd = elem_pow(r, s.y, d);
    const auto zd = elem_pow(r, s.z, d);
    const auto wd = elem_pow(r, s.w, d);
    MatState<R> t;
    t.j = s.j + 1;
    t.x = r.add(r.mul(sign, r.mul(c, xd)), yd);
    t.y = r.neg(r.mul(sign, xd));
    t.z = r.add(r.mul(sign, r.mul(c, zd)), wd);
    t.w = r.neg(r.mul(sign, zd));
    return t;
}

// First N terms of x_1 = c, x_2 = (-1)^d (c^{d+1} + 1),
// x_{n+2} = (-1)^d c x_{n+1}^d + x_n^{d^2}.
template <class R>
std::vector<typename R::Elem> sequence_terms(const R& r, uint64_t d,
                                             const typename R::Elem& c, int N,
                                             const IterateLimits& limits = {}) {
    if (N < 1) throw invalid_input("sequence_terms: N must be >= 1");
    if (d < 2) throw invalid_input("sequence_terms: d must be >= 2");
    if (r.is_zero(c)) throw invalid_input("sequence_terms: c must be nonzero");
    const auto sign = seq_sign(r, d);
    std::vector<typename R::Elem> xs;
    xs.reserve(static_cast<size_t>(N));
    xs.push_back(c);
    if (N >= 2)
        xs.push_back(r.mul(sign, r.add(elem_pow(r, c, d + 1), r.one())));
    for (int n = 3; n <= N; ++n) {
        const auto& x1 = xs[static_cast<size_t>(n - 3)];  // x_n
        const auto& x2 = xs[static_cast<size_t>(n - 2)];  // x_{n+1}
        auto term = r.add(r.mul(sign, r.mul(c, elem_pow(r, x2, d))),
                          elem_pow(r, elem_pow(r, x1, d), d));
        if (coeff_digits(r, term) > limits.max_total_digits)
            throw size_limit_error("sequence_terms: size guard exceeded at index " +
                                   std::to_string(n));
        xs.push_back(std::move(term));
    }
    return xs;
}

// Identity report for the integer instantiation: divisibility, gcd and
// matrix-linkage checks for the first N index values. Hypothesis failures
// (unit c, or c a p-th power up to unit) are reported as skipped, not
// silently dropped.
struct IdentityReport {
    struct Item {
        std::string name;
        int n = 0;
        bool ok = false;
        bool skipped = false;
        std::string note;
    };
    std::vector<Item> items;

    bool all_ok() const {
        for (const auto& it : items)
            if (!it.skipped && !it.ok) return false;
        return true;
    }
};

IdentityReport check_sequence_identities(uint64_t d, const Int& c, int N);

// Cycle scan of the pair map (a, b) -> (b, (-1)^d c b^d + a^{d^2}) on
// F_q x F_q. Because x_{n+2} depends only on (x_n, x_{n+1}), the scan yields
// the complete set of ratios x_{n+1}/x_n realized over all n >= 1: the
// preperiod plus one full cycle.
struct PairScan {
    enum Status { Cycle, ZeroTerm, CapExceeded } status = Cycle;
    uint64_t preperiod = 0;
    uint64_t period = 0;
    std::vector<FieldElem> terms;    // x_1 .. x_{preperiod + period + 1}
    std::vector<FieldElem> ratios;   // x_{n+1}/x_n for n = 1 .. preperiod + period
    uint64_t zero_index = 0;         // for ZeroTerm: least n with x_n = 0
};

PairScan pair_cycle_scan(const FieldCtx& F, uint64_t d, const FieldElem& c,
                         uint64_t step_cap = 1000000);

}  // namespace invstab

#endif
