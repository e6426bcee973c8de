#include "invstab/scalars.hpp"

namespace invstab {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 3.3 * 10^24.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<Int> int_kth_root(const Int& n, uint64_t k) {
    if (k == 0) throw invalid_input("int_kth_root: k must be positive");
    if (k == 1) return n;
    if (sgn(n) < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = int_kth_root(-n, k);
        if (!r) return std::nullopt;
        return -*r;
    }
    Int root;
    // mpz_root computes the exact integer floor root and reports exactness.
    int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    if (!exact) return std::nullopt;
    Int check;
    mpz_pow_ui(check.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(k));
    if (check != n) return std::nullopt;
    return root;
}

std::optional<Rat> rat_kth_root(const Rat& x, uint64_t k) {
    if (sgn(x) == 0) return Rat(0);
    auto num = int_kth_root(Int(x.get_num()), k);
    if (!num) return std::nullopt;
    auto den = int_kth_root(Int(x.get_den()), k);
    if (!den) return std::nullopt;
    Rat r(*num, *den);
    r.canonicalize();
    return r;
}

bool int_is_pth_power_up_to_unit(const Int& n, uint64_t p) {
    if (!is_prime_u64(p)) throw invalid_input("int_is_pth_power_up_to_unit: p must be prime");
    if (sgn(n) == 0) throw invalid_input("int_is_pth_power_up_to_unit: n must be nonzero");
    // n = u * m^p with u in {+1,-1} holds iff |n| is a perfect p-th power:
    // for odd p the sign folds into m, for p = 2 it folds into u.
    return int_kth_root(abs(n), p).has_value();
}

bool rat_is_pth_power(const Rat& x, uint64_t p) {
    if (!is_prime_u64(p)) throw invalid_input("rat_is_pth_power: p must be prime");
    if (sgn(x) == 0) throw invalid_input("rat_is_pth_power: x must be nonzero");
    return rat_kth_root(x, p).has_value();
}

bool rat_in_4k4(const Rat& x) {
    if (sgn(x) == 0) throw invalid_input("rat_in_4k4: x must be nonzero");
    return rat_kth_root(x / 4, 4).has_value();
}

int legendre(const Int& a, uint64_t p) {
    if (p == 2 || !is_prime_u64(p)) throw invalid_input("legendre: p must be an odd prime");
    Int r = a % Int(static_cast<unsigned long>(p));
    if (sgn(r) < 0) r += Int(p);
    uint64_t au = r.get_ui();
    if (au == 0) return 0;
    uint64_t e = powmod_u64(au, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

std::vector<uint64_t> prime_divisors_u64(uint64_t d) {
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            out.push_back(p);
            while (d % p == 0) d /= p;
        }
    }
    if (d > 1) out.push_back(d);
    return out;
}

uint64_t radical_u64(uint64_t d) {
    uint64_t r = 1;
    for (uint64_t p : prime_divisors_u64(d)) r *= p;
    return r;
}

}  // namespace invstab
