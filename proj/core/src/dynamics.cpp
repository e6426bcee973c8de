#include "invstab/dynamics.hpp"

namespace invstab {

PeriodicityResult is_infinity_periodic(const FieldCtx& F, uint64_t d, const FieldElem& c,
                                       uint64_t cap) {
    if (d < 2) throw invalid_input("is_infinity_periodic: d must be >= 2");
    if (F.is_zero(c)) throw invalid_input("is_infinity_periodic: c must be nonzero");
    const uint64_t q = F.q();
    if (cap == 0) cap = q + 1;

    // Point encoding: 0..q-1 are the affine points [a:1], q is infinity.
    const uint64_t inf = q;
    std::vector<int64_t> first_seen(q + 1, -1);
    uint64_t cur = inf;
    for (uint64_t step = 0; step <= cap; ++step) {
        if (first_seen[cur] >= 0) {
            const uint64_t j = static_cast<uint64_t>(first_seen[cur]);
            PeriodicityResult res;
            res.period = step - j;
            res.preperiod = j;
            res.kind = (cur == inf) ? PeriodicityResult::Periodic : PeriodicityResult::NotPeriodic;
            return res;
        }
        first_seen[cur] = static_cast<int64_t>(step);
        // Phi([X:Y]) = [Y^d : X^d + c Y^d]
        FieldElem a = cur == inf ? F.one() : F.from_index(cur);
        FieldElem b = cur == inf ? F.zero() : F.one();
        const Int dz(static_cast<unsigned long>(d));
        FieldElem ad = F.pow(a, dz);
        FieldElem bd = F.pow(b, dz);
        FieldElem na = bd;
        FieldElem nb = F.add(ad, F.mul(c, bd));
        if (F.is_zero(nb)) {
            cur = inf;
        } else {
            cur = F.index_of(F.mul(na, F.inv(nb)));
        }
    }
    return PeriodicityResult{PeriodicityResult::CapExceeded, 0, 0};
}

}  // namespace invstab
