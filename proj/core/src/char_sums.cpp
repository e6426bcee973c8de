#include "invstab/char_sums.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace invstab {

std::vector<int8_t> quadratic_character_table(uint64_t p) {
    if (p == 2 || !is_prime_u64(p)) throw invalid_input("quadratic character: p must be an odd prime");
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t y = 1; y <= (p - 1) / 2; ++y) chi[mulmod_u64(y, y, p)] = 1;
    return chi;
}

CubicCharSum cubic_char_sum(uint64_t p, const std::array<int64_t, 4>& f) {
    const auto chi = quadratic_character_table(p);
    const FieldCtx F = FieldCtx::prime(p);
    const FqRing r(F);
    Poly<FqRing> fp;
    for (int64_t c : f) fp.c.push_back(F.from_int(c));
    poly_trim(r, fp);
    if (fp.deg() != 3) throw invalid_input("cubic_char_sum: leading coefficient vanishes mod p");
    if (poly_gcd(r, fp, poly_derivative(r, fp)).deg() != 0)
        throw invalid_input("cubic_char_sum: f has a repeated root");

    CubicCharSum out;
    for (uint64_t x = 0; x < p; ++x) {
        // Horner with 64-bit reductions
        uint64_t v = 0;
        for (int i = 3; i >= 0; --i) {
            int64_t c = f[static_cast<size_t>(i)] % static_cast<int64_t>(p);
            uint64_t cu = c >= 0 ? static_cast<uint64_t>(c) : p - static_cast<uint64_t>(-c);
            v = (mulmod_u64(v, x, p) + cu) % p;
        }
        out.sum += chi[v];
    }
    out.weil_ok = static_cast<unsigned __int128>(out.sum) * out.sum <= 4 * static_cast<unsigned __int128>(p);
    return out;
}

int64_t quad_char_sum(uint64_t p, int64_t a, int64_t b, int64_t c) {
    const auto chi = quadratic_character_table(p);
    auto red = [p](int64_t v) {
        int64_t m = v % static_cast<int64_t>(p);
        return m >= 0 ? static_cast<uint64_t>(m) : p - static_cast<uint64_t>(-m);
    };
    const uint64_t au = red(a), bu = red(b), cu = red(c);
    if (au == 0) throw invalid_input("quad_char_sum: a must be nonzero mod p");

    int64_t direct = 0;
    for (uint64_t x = 0; x < p; ++x)
        direct += chi[(mulmod_u64(au, mulmod_u64(x, x, p), p) + mulmod_u64(bu, x, p) + cu) % p];

    const uint64_t disc = (mulmod_u64(bu, bu, p) + p - mulmod_u64(4 % p, mulmod_u64(au, cu, p), p)) % p;
    const int64_t closed = disc != 0 ? -chi[au] : static_cast<int64_t>(chi[au]) * static_cast<int64_t>(p - 1);
    if (direct != closed)
        throw error("quad_char_sum: direct sum disagrees with the closed form");
    return direct;
}

unsigned worker_count() {
    if (const char* env = std::getenv("INVSTAB_THREADS")) {
        const long n = std::atol(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

FamilyReport enumerate_stable_family(uint64_t p, bool verify_stability, uint64_t step_cap) {
    // validate the Fermat shape p = 2^{n+1} + 1, n >= 3
    if (!is_prime_u64(p)) throw invalid_input("enumerate_stable_family: p must be prime");
    uint64_t m = p - 1;
    uint32_t e = 0;
    while (m > 1 && m % 2 == 0) {
        m >>= 1;
        ++e;
    }
    if (m != 1 || e < 4)
        throw invalid_input("enumerate_stable_family: p must equal 2^{n+1} + 1 with n >= 3");

    FamilyReport rep;
    rep.p = p;
    rep.n = e - 1;
    rep.d = uint64_t(1) << rep.n;

    const auto chi = quadratic_character_table(p);
    for (uint64_t c = 0; c < p; ++c) {
        if (chi[(c + p - 1) % p] == 1 && chi[c] == -1 && chi[(c + 1) % p] == -1)
            rep.qualifying_c.push_back(c);
    }
    rep.count = rep.qualifying_c.size();

    {
        CubicCharSum cs = cubic_char_sum(p, {0, -1, 0, 1});  // x^3 - x
        rep.cubic_sum = cs.sum;
        const int64_t rhs = static_cast<int64_t>(p) + 1 + cs.sum;
        rep.identity_ok = cs.weil_ok && rhs % 8 == 0 &&
                          rhs / 8 == static_cast<int64_t>(rep.count);
    }

    // floor((sqrt p - 1)^2 / 8): largest k with p + 1 - 8k >= 2 sqrt(p),
    // decided exactly by squaring.
    {
        uint64_t k = (p + 1) / 8;
        auto fits = [p](uint64_t k) {
            if (8 * k > p + 1) return false;
            const unsigned __int128 lhs = p + 1 - 8 * k;
            return lhs * lhs >= 4 * static_cast<unsigned __int128>(p);
        };
        while (k > 0 && !fits(k)) --k;
        rep.bound = k;
        rep.bound_ok = rep.count >= rep.bound;
    }

    // Expanded indicator sum in exact rationals:
    // t(x) = (chi(x-1)+1)/2 * (1-chi(x))/2 * (1-chi(x+1))/2
    {
        Rat total(0);
        for (uint64_t x = 0; x < p; ++x) {
            const Rat t = Rat(chi[(x + p - 1) % p] + 1) * Rat(1 - chi[x]) *
                          Rat(1 - chi[(x + 1) % p]) / 8;
            total += t;
        }
        rep.indicator_ok = total.get_den() == 1 && total == Rat(static_cast<long>(rep.count));
    }

    if (verify_stability && !rep.qualifying_c.empty()) {
        const FieldCtx F = FieldCtx::prime(p);
        rep.verdicts.resize(rep.qualifying_c.size());
        const unsigned workers = std::min<unsigned>(worker_count(),
                                                    static_cast<unsigned>(rep.qualifying_c.size()));
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < rep.qualifying_c.size();
                     i = next.fetch_add(1)) {
                    const uint64_t c = rep.qualifying_c[i];
                    rep.verdicts[i] = {c, decide_fq(F, rep.d, F.from_index(c), step_cap)};
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    return rep;
}

}  // namespace invstab
