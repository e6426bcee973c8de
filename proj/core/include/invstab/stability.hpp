#ifndef INVSTAB_STABILITY_HPP
#define INVSTAB_STABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "invstab/irreducibility.hpp"
#include "invstab/norm_sequence.hpp"

namespace invstab {

enum class VerdictKind {
    InverselyStable,
    NotInverselyStable,
    PhiReducible,
    InfinityPeriodic,
    Guaranteed,
    NotApplicable,
    Inconclusive,
    InvalidInput,
};

std::string verdict_kind_name(VerdictKind k);

// Outcome of a stability decision, with enough witness payload to re-verify
// externally: a NotInverselyStable verdict carries the least n with g_n
// reducible and the non-free ratio; an InverselyStable verdict over F_q
// carries the finite ratio certificate (preperiod + one cycle).
struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<uint64_t> failing_index;     // least n with g_n reducible
    std::optional<FieldElem> failing_ratio;    // x_n / x_{n-1} that is not rad(d)-free
    std::optional<IrreducibilityCertificate> cert;
    std::optional<PairScan> scan;
    std::vector<std::string> notes;
};

// Complete decision over F_{p^k}: characteristic check, the binomial
// criterion on z^d + c, then the pair-map cycle scan and a rad(d)-freeness
// test on every ratio in the finite certificate.
Verdict decide_fq(const FieldCtx& F, uint64_t d, const FieldElem& c,
                  uint64_t step_cap = 1000000);
Verdict decide_fq(uint64_t p, uint32_t k, uint64_t d, const FieldElem& c,
                  uint64_t step_cap = 1000000);

// Sufficient-condition guarantee over Z: Guaranteed iff z^d + c is
// irreducible over Q and c is not a p-th power up to sign for any p | d.
// A failed hypothesis yields NotApplicable (never NotInverselyStable).
Verdict guarantee_z(uint64_t d, const Int& c);

// Sufficient-condition guarantee over Q(t) for d >= 3 and nonconstant
// c in Q[t]: Guaranteed iff z^d + c is irreducible.
Verdict guarantee_ft(uint64_t d, const QPoly& c);

// Desk verification of the internals behind the function-field guarantee:
// the degree law deg x_n = (d^n - 1)/(d - 1) deg c, the side conditions
// gcd(x_{2k}, c) = 1, and the even-index terms never being p-th powers up
// to a unit.
struct FtInternalsReport {
    std::vector<long> degrees;   // deg x_n for n = 1..N
    std::vector<long> expected;
    bool degree_law_ok = false;
    bool even_gcd_ok = false;
    bool even_not_pth_power_ok = false;
    std::vector<std::string> notes;

    bool all_ok() const { return degree_law_ok && even_gcd_ok && even_not_pth_power_ok; }
};

FtInternalsReport verify_ft_internals(uint64_t d, const QPoly& c, int N);

// Independent cross-validation over F_q: Rabin-tests the actual iterate
// denominators g_1..g_max_depth against the ratio-based prediction.
struct CrossvalReport {
    struct Depth {
        int n = 0;
        bool direct_irreducible = false;     // Rabin on g_n
        bool predicted_irreducible = false;  // binomial criterion + ratio test
    };
    std::vector<Depth> depths;
    bool agree = true;
    bool truncated = false;
    std::string note;
};

CrossvalReport crossvalidate_fq(const FieldCtx& F, uint64_t d, const FieldElem& c,
                                int max_depth, long degree_ceiling = 2000);

// Ratio x_{i+1}/x_i for arbitrary i >= 1 read off a completed cycle scan.
FieldElem scan_ratio_at(const FieldCtx& F, const PairScan& scan, uint64_t i);

}  // namespace invstab

#endif
