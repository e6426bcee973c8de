#ifndef INVSTAB_CHAR_SUMS_HPP
#define INVSTAB_CHAR_SUMS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "invstab/stability.hpp"

namespace invstab {

// Quadratic character table over F_p: chi[x] in {-1, 0, +1}, chi[0] = 0.
std::vector<int8_t> quadratic_character_table(uint64_t p);

struct CubicCharSum {
    int64_t sum = 0;
    bool weil_ok = false;  // |sum| <= 2 sqrt(p)
};

// Sum of chi(f(x)) over F_p for a cubic f (coefficients low-to-high, cubic
// coefficient nonzero mod p) with distinct roots in the closure
// (gcd(f, f') = 1 is a precondition and is validated).
CubicCharSum cubic_char_sum(uint64_t p, const std::array<int64_t, 4>& f);

// Sum of chi(a x^2 + b x + c) over F_p, computed directly and via the
// closed form -chi(a) (nonzero discriminant) or chi(a)(p-1) (zero
// discriminant); the two routes must agree.
int64_t quad_char_sum(uint64_t p, int64_t a, int64_t b, int64_t c);

// Enumeration of the guaranteed inversely stable family for d = 2^n over
// F_p with p = 2^{n+1} + 1 prime: all c with chi(c-1) = +1 and
// chi(c) = chi(c+1) = -1, together with the counting identity
// S = (p + 1 + sum chi(x^3 - x))/8 and the lower bound floor((sqrt p - 1)^2 / 8).
struct FamilyReport {
    uint64_t p = 0;
    uint32_t n = 0;   // p = 2^{n+1} + 1, d = 2^n
    uint64_t d = 0;
    std::vector<uint64_t> qualifying_c;
    uint64_t count = 0;            // S
    uint64_t bound = 0;            // floor((sqrt(p) - 1)^2 / 8)
    bool bound_ok = false;         // S >= bound
    int64_t cubic_sum = 0;         // sum over x of chi(x^3 - x)
    bool identity_ok = false;      // 8S = p + 1 + cubic_sum
    bool indicator_ok = false;     // expanded indicator totals S exactly
    std::vector<std::pair<uint64_t, Verdict>> verdicts;  // per qualifying c
};

FamilyReport enumerate_stable_family(uint64_t p, bool verify_stability,
                                     uint64_t step_cap = 1000000);

// Worker count for the per-c verification fan-out; reads INVSTAB_THREADS,
// defaulting to the hardware concurrency.
unsigned worker_count();

}  // namespace invstab

#endif
