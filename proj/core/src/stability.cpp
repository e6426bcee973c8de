#include "invstab/stability.hpp"

#include <algorithm>

#include "invstab/dynamics.hpp"

namespace invstab {

std::string verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::InverselyStable: return "InverselyStable";
        case VerdictKind::NotInverselyStable: return "NotInverselyStable";
        case VerdictKind::PhiReducible: return "PhiReducible";
        case VerdictKind::InfinityPeriodic: return "InfinityPeriodic";
        case VerdictKind::Guaranteed: return "Guaranteed";
        case VerdictKind::NotApplicable: return "NotApplicable";
        case VerdictKind::Inconclusive: return "Inconclusive";
        case VerdictKind::InvalidInput: return "InvalidInput";
    }
    return "?";
}

Verdict decide_fq(const FieldCtx& F, uint64_t d, const FieldElem& c, uint64_t step_cap) {
    Verdict v;
    if (d < 2) {
        v.kind = VerdictKind::InvalidInput;
        v.notes.push_back("d must be >= 2");
        return v;
    }
    if (F.is_zero(c)) {
        v.kind = VerdictKind::InvalidInput;
        v.notes.push_back("c must be nonzero (z^d is not inversely stable material)");
        return v;
    }
    if (d % F.p() == 0) {
        // z^d + c is a p-th power of a lower binomial in characteristic p.
        v.kind = VerdictKind::PhiReducible;
        v.failing_index = 1;
        v.notes.push_back("char(F_q) divides d");
        return v;
    }
    // z^d + c = x^d - (-c)
    const auto cert = binomial_irred_fq(F, d, F.neg(c));
    if (!cert.irreducible()) {
        v.kind = VerdictKind::PhiReducible;
        v.failing_index = 1;
        v.cert = cert;
        return v;
    }
    v.cert = cert;

    auto scan = pair_cycle_scan(F, d, c, step_cap);
    if (scan.status == PairScan::CapExceeded) {
        v.kind = VerdictKind::Inconclusive;
        v.notes.push_back("CapExceeded: pair scan stopped after " + std::to_string(step_cap) +
                          " steps");
        return v;
    }
    if (scan.status == PairScan::ZeroTerm) {
        // Cannot happen when z^d + c is irreducible; kept as a safety net.
        v.kind = VerdictKind::InfinityPeriodic;
        v.failing_index = scan.zero_index;
        v.scan = std::move(scan);
        return v;
    }

    const uint64_t rad = radical_u64(d);
    for (size_t i = 0; i < scan.ratios.size(); ++i) {
        if (!is_m_free(F, scan.ratios[i], rad)) {
            v.kind = VerdictKind::NotInverselyStable;
            // ratio index i+1 failing means g_{i+2} is the least reducible
            // denominator
            v.failing_index = i + 2;
            v.failing_ratio = scan.ratios[i];
            v.scan = std::move(scan);
            return v;
        }
    }
    v.kind = VerdictKind::InverselyStable;
    v.scan = std::move(scan);
    return v;
}

Verdict decide_fq(uint64_t p, uint32_t k, uint64_t d, const FieldElem& c, uint64_t step_cap) {
    const FieldCtx F = k <= 1 ? FieldCtx::prime(p) : FieldCtx::extension(p, k);
    return decide_fq(F, d, c, step_cap);
}

Verdict guarantee_z(uint64_t d, const Int& c) {
    Verdict v;
    if (d < 2) {
        v.kind = VerdictKind::InvalidInput;
        v.notes.push_back("d must be >= 2");
        return v;
    }
    if (sgn(c) == 0) {
        v.kind = VerdictKind::InvalidInput;
        v.notes.push_back("c must be nonzero");
        return v;
    }
    if (abs(c) == 1) {
        v.kind = VerdictKind::NotApplicable;
        v.notes.push_back("c is a unit of Z: c in uZ^p for every p, hypothesis unsatisfiable");
        return v;
    }
    const auto cert = binomial_irred_q(d, Rat(c));
    v.cert = cert;
    if (!cert.irreducible()) {
        v.kind = VerdictKind::PhiReducible;
        v.failing_index = 1;
        return v;
    }
    std::vector<std::string> violated;
    for (uint64_t p : prime_divisors_u64(d)) {
        if (int_is_pth_power_up_to_unit(c, p))
            violated.push_back("c in uZ^" + std::to_string(p));
    }
    // Fast path: once z^d + c is irreducible, odd d needs
    // nothing more and even d only needs c to not be a square.
    if (d % 2 == 1) {
        v.notes.push_back("fast path: d odd");
    } else if (!int_is_pth_power_up_to_unit(c, 2)) {
        v.notes.push_back("fast path: d even and c is not a square");
    }
    if (!violated.empty()) {
        v.kind = VerdictKind::NotApplicable;
        for (auto& s : violated) v.notes.push_back("violated hypothesis: " + s);
        v.notes.push_back("a failed sufficient condition does not imply instability");
        return v;
    }
    v.kind = VerdictKind::Guaranteed;
    return v;
}

Verdict guarantee_ft(uint64_t d, const QPoly& c) {
    Verdict v;
    if (d < 3) {
        v.kind = VerdictKind::InvalidInput;
        v.notes.push_back("the function-field guarantee requires d >= 3");
        return v;
    }
    if (c.deg() < 1) {
        v.kind = VerdictKind::InvalidInput;
        v.notes.push_back("c must be a nonconstant polynomial in t");
        return v;
    }
    const auto cert = binomial_irred_ft(d, c);
    v.cert = cert;
    if (!cert.irreducible()) {
        v.kind = VerdictKind::PhiReducible;
        v.failing_index = 1;
        return v;
    }
    v.kind = VerdictKind::Guaranteed;
    return v;
}

FtInternalsReport verify_ft_internals(uint64_t d, const QPoly& c, int N) {
    if (d < 3) throw invalid_input("verify_ft_internals: d must be >= 3");
    if (c.deg() < 1) throw invalid_input("verify_ft_internals: c must be nonconstant");
    if (N < 1) throw invalid_input("verify_ft_internals: N must be >= 1");
    const RatPolyRing ring;
    const RatRing QQ;
    FtInternalsReport rep;

    std::vector<QPoly> xs;
    try {
        xs = sequence_terms(ring, d, c, N);
    } catch (const size_limit_error& e) {
        rep.notes.push_back(std::string("partial report: ") + e.what());
        // regenerate as many terms as fit
        for (int M = N - 1; M >= 1; --M) {
            try {
                xs = sequence_terms(ring, d, c, M);
                break;
            } catch (const size_limit_error&) {
            }
        }
    }

    rep.degree_law_ok = true;
    for (size_t i = 0; i < xs.size(); ++i) {
        rep.degrees.push_back(xs[i].deg());
        // (d^n - 1)/(d - 1) * deg c
        long e = 0, power = 1;
        for (size_t n = 0; n <= i; ++n) {
            e += power;
            power *= static_cast<long>(d);
        }
        rep.expected.push_back(e * c.deg());
        rep.degree_law_ok = rep.degree_law_ok && rep.degrees[i] == rep.expected[i];
    }

    rep.even_gcd_ok = true;
    rep.even_not_pth_power_ok = true;
    for (size_t i = 1; i < xs.size(); i += 2) {  // x_{2k} at even 1-based index
        rep.even_gcd_ok = rep.even_gcd_ok && poly_gcd(QQ, xs[i], c).deg() == 0;
        for (uint64_t p : prime_divisors_u64(d)) {
            if (is_pth_power_up_to_unit_ft(xs[i], p)) {
                rep.even_not_pth_power_ok = false;
                rep.notes.push_back("x_" + std::to_string(2 * (i / 2 + 1)) + " is a " +
                                    std::to_string(p) + "-th power up to unit");
            }
        }
    }
    return rep;
}

FieldElem scan_ratio_at(const FieldCtx& F, const PairScan& scan, uint64_t i) {
    if (scan.status != PairScan::Cycle || i < 1)
        throw invalid_input("scan_ratio_at: completed cycle scan required, i >= 1");
    if (i <= scan.ratios.size()) return scan.ratios[i - 1];
    const uint64_t wrapped = scan.preperiod + (i - scan.preperiod - 1) % scan.period + 1;
    return scan.ratios[wrapped - 1];
}

CrossvalReport crossvalidate_fq(const FieldCtx& F, uint64_t d, const FieldElem& c,
                                int max_depth, long degree_ceiling) {
    CrossvalReport rep;
    if (d < 2 || F.is_zero(c)) throw invalid_input("crossvalidate_fq: d >= 2 and c != 0 required");
    if (d % F.p() == 0) {
        rep.note = "char(F_q) divides d; both routes degenerate";
        return rep;
    }
    const FqRing r(F);
    const auto cert = binomial_irred_fq(F, d, F.neg(c));
    std::optional<PairScan> scan;
    if (cert.irreducible()) {
        auto s = pair_cycle_scan(F, d, c);
        if (s.status == PairScan::Cycle) scan = std::move(s);
    }
    const uint64_t rad = radical_u64(d);

    // With g_1 reducible the iterates leave the theory's regime (degrees can
    // collapse after gcd cancellation), so only the base level is compared.
    if (!cert.irreducible()) max_depth = std::min(max_depth, 1);

    long degree = 1;
    for (int n = 1; n <= max_depth; ++n) {
        degree *= static_cast<long>(d);
        if (degree > degree_ceiling) {
            rep.truncated = true;
            rep.note = "degree ceiling reached at depth " + std::to_string(n);
            break;
        }
        CrossvalReport::Depth row;
        row.n = n;
        const auto it = iterate_phi(r, d, c, n);
        row.direct_irreducible = rabin_irreducible(F, it.g);

        bool pred = cert.irreducible();
        if (pred && scan) {
            for (int i = 1; i < n && pred; ++i)
                pred = is_m_free(F, scan_ratio_at(F, *scan, static_cast<uint64_t>(i)), rad);
        } else if (pred && !scan) {
            pred = n == 1;  // scan failed; only the base level is predicted
        }
        row.predicted_irreducible = pred;
        rep.agree = rep.agree && row.direct_irreducible == row.predicted_irreducible;
        rep.depths.push_back(row);
    }
    return rep;
}

}  // namespace invstab
