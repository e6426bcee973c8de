#include "invstab/norm_sequence.hpp"

#include <unordered_map>

namespace invstab {

namespace {

Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

IdentityReport check_sequence_identities(uint64_t d, const Int& c, int N) {
    if (d < 2) throw invalid_input("check_sequence_identities: d must be >= 2");
    if (sgn(c) == 0) throw invalid_input("check_sequence_identities: c must be nonzero");
    if (N < 1) throw invalid_input("check_sequence_identities: N must be >= 1");
    const IntRing Z;
    IdentityReport rep;
    const int M = 2 * N + 1;
    const auto xs = sequence_terms(Z, d, c, M);
    const Int sign = d % 2 == 0 ? Int(1) : Int(-1);
    const bool c_is_unit = (abs(c) == 1);

    // consecutive coprimality
    for (int n = 1; n < M; ++n) {
        rep.items.push_back({"gcd(x_{n+1}, x_n) = 1", n,
                             int_gcd(xs[n], xs[n - 1]) == 1, false, ""});
    }

    // matrix linkage: x-entries match, z_{n+1} = (-1)^d x_n
    {
        auto st = mat_initial(Z, c);
        bool x_match = st.x == xs[0];
        for (int n = 1; n < M; ++n) {
            auto next = mat_next(Z, st, d, c);
            rep.items.push_back({"z_{n+1} = (-1)^d x_n", n, next.z == sign * xs[n - 1], false, ""});
            x_match = x_match && next.x == xs[n];
            st = std::move(next);
        }
        rep.items.push_back({"matrix x-entries equal the recurrence", M, x_match, false, ""});
    }

    // divisibility block; requires c to be a non-unit
    for (int n = 1; n <= N; ++n) {
        const Int& odd = xs[2 * n - 2];   // x_{2n-1}
        const Int& even = xs[2 * n - 1];  // x_{2n}
        if (c_is_unit) {
            rep.items.push_back({"c | x_{2n-1}", n, false, true, "hypothesis fails: c is a unit"});
            rep.items.push_back({"c | x_{2n} - (-1)^d", n, false, true, "hypothesis fails: c is a unit"});
            rep.items.push_back({"gcd(x_{2n-1}/c, c) = 1", n, false, true, "hypothesis fails: c is a unit"});
            continue;
        }
        const bool div_odd = mpz_divisible_p(odd.get_mpz_t(), c.get_mpz_t());
        rep.items.push_back({"c | x_{2n-1}", n, div_odd, false, ""});
        rep.items.push_back({"c | x_{2n} - (-1)^d", n,
                             mpz_divisible_p(Int(even - sign).get_mpz_t(), c.get_mpz_t()) != 0,
                             false, ""});
        if (div_odd) {
            rep.items.push_back({"gcd(x_{2n-1}/c, c) = 1", n,
                                 int_gcd(Int(odd / c), c) == 1, false, ""});
        } else {
            rep.items.push_back({"gcd(x_{2n-1}/c, c) = 1", n, false, false, "x_{2n-1}/c undefined"});
        }
    }

    // power-freeness of the odd-index terms, conditional on the same
    // property for c
    bool hyp = !c_is_unit;
    for (uint64_t p : prime_divisors_u64(d))
        hyp = hyp && !int_is_pth_power_up_to_unit(c, p);
    for (int n = 1; n <= N; ++n) {
        if (!hyp) {
            rep.items.push_back({"x_{2n-1} not in uZ^p", n, false, true,
                                 "hypothesis fails: c in uZ^p for some p | d, or c is a unit"});
            continue;
        }
        bool ok = true;
        for (uint64_t p : prime_divisors_u64(d))
            ok = ok && !int_is_pth_power_up_to_unit(xs[2 * n - 2], p);
        rep.items.push_back({"x_{2n-1} not in uZ^p", n, ok, false, ""});
    }

    // linkage with the orbit denominators: b_1 = 1, b_2 = c,
    // b_{n+2} = c b_{n+1}^d + b_n^{d^2}; x_{2n-1} = b_{2n}, x_{2n} = (-1)^d b_{2n+1}
    {
        std::vector<Int> bs{Int(1), c};
        for (int i = 2; i < 2 * N + 2; ++i) {
            Int bd, bdd;
            mpz_pow_ui(bd.get_mpz_t(), bs[i - 1].get_mpz_t(), d);
            mpz_pow_ui(bdd.get_mpz_t(), bs[i - 2].get_mpz_t(), d);
            Int bdd2;
            mpz_pow_ui(bdd2.get_mpz_t(), bdd.get_mpz_t(), d);
            bs.push_back(c * bd + bdd2);
        }
        for (int n = 1; n <= N; ++n) {
            rep.items.push_back({"x_{2n-1} = b_{2n}", n, xs[2 * n - 2] == bs[2 * n - 1], false, ""});
            rep.items.push_back({"x_{2n} = (-1)^d b_{2n+1}", n,
                                 xs[2 * n - 1] == sign * bs[2 * n], false, ""});
        }
    }

    return rep;
}

PairScan pair_cycle_scan(const FieldCtx& F, uint64_t d, const FieldElem& c, uint64_t step_cap) {
    if (d < 2) throw invalid_input("pair_cycle_scan: d must be >= 2");
    if (F.is_zero(c)) throw invalid_input("pair_cycle_scan: c must be nonzero");
    if (step_cap < 1) throw invalid_input("pair_cycle_scan: step_cap must be >= 1");

    PairScan out;
    const FieldElem sign = d % 2 == 0 ? F.one() : F.neg(F.one());
    const Int dz(static_cast<unsigned long>(d));

    // x_1 = c, x_2 = (-1)^d (c^{d+1} + 1)
    out.terms.push_back(c);
    out.terms.push_back(F.mul(sign, F.add(F.pow(c, dz + 1), F.one())));

    struct PairHash {
        size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
            return std::hash<uint64_t>()(p.first * 0x9e3779b97f4a7c15ull ^ p.second);
        }
    };
    std::unordered_map<std::pair<uint64_t, uint64_t>, uint64_t, PairHash> seen;

    for (uint64_t n = 1;; ++n) {
        const FieldElem& xn = out.terms[n - 1];
        const FieldElem& xn1 = out.terms[n];
        if (F.is_zero(xn)) {
            out.status = PairScan::ZeroTerm;
            out.zero_index = n;
            return out;
        }
        if (F.is_zero(xn1)) {
            out.status = PairScan::ZeroTerm;
            out.zero_index = n + 1;
            return out;
        }
        const auto key = std::make_pair(F.index_of(xn), F.index_of(xn1));
        auto [it, inserted] = seen.try_emplace(key, n);
        if (!inserted) {
            out.status = PairScan::Cycle;
            out.preperiod = it->second - 1;
            out.period = n - it->second;
            const uint64_t keep = out.preperiod + out.period;
            out.terms.resize(keep + 1);
            out.ratios.reserve(keep);
            for (uint64_t i = 0; i < keep; ++i)
                out.ratios.push_back(F.mul(out.terms[i + 1], F.inv(out.terms[i])));
            return out;
        }
        if (n >= step_cap) {
            out.status = PairScan::CapExceeded;
            return out;
        }
        // x_{n+2} = (-1)^d c x_{n+1}^d + x_n^{d^2}
        FieldElem next = F.add(F.mul(sign, F.mul(c, F.pow(xn1, dz))),
                               F.pow(F.pow(xn, dz), dz));
        out.terms.push_back(std::move(next));
    }
}

}  // namespace invstab
