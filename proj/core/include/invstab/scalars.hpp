#ifndef INVSTAB_SCALARS_HPP
#define INVSTAB_SCALARS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "invstab/errors.hpp"

namespace invstab {

// Exact scalar domains. Int is sign+magnitude arbitrary precision, Rat is
// kept canonical (coprime, positive denominator) by construction.
using Int = mpz_class;
using Rat = mpq_class;

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(uint64_t n);

// Exact k-th root: returns r with r^k == n, if one exists. For odd k the
// sign of n is absorbed into r; for even k negative n has no root.
std::optional<Int> int_kth_root(const Int& n, uint64_t k);
std::optional<Rat> rat_kth_root(const Rat& x, uint64_t k);

// True iff n = u * m^p with u in {+1, -1}, i.e. |n| is a perfect p-th power.
// p must be prime and n nonzero.
bool int_is_pth_power_up_to_unit(const Int& n, uint64_t p);

// True iff x = y^p for some rational y. p prime, x nonzero.
bool rat_is_pth_power(const Rat& x, uint64_t p);

// True iff x/4 is a rational fourth power. x nonzero.
bool rat_in_4k4(const Rat& x);

// Legendre symbol (a/p) via Euler's criterion; p an odd prime.
int legendre(const Int& a, uint64_t p);

// 64-bit modular helpers shared with the finite-field layer.
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);

// rad(d): product of the distinct prime divisors of d (d >= 1).
uint64_t radical_u64(uint64_t d);

// Distinct prime divisors of d, ascending (trial division; d is desk-scale).
std::vector<uint64_t> prime_divisors_u64(uint64_t d);

}  // namespace invstab

#endif
