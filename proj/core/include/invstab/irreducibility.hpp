#ifndef INVSTAB_IRREDUCIBILITY_HPP
#define INVSTAB_IRREDUCIBILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "invstab/finite_field.hpp"
#include "invstab/polynomial.hpp"

namespace invstab {

enum class IrredVerdict { Irreducible, Reducible, Inconclusive };

enum class IrredMethod { BinomialCriterion, Rabin, ModPReduction, Eisenstein, Factorization };

struct IrreducibilityCertificate {
    IrredVerdict verdict = IrredVerdict::Inconclusive;
    IrredMethod method = IrredMethod::BinomialCriterion;
    uint64_t certifying_prime = 0;  // for ModPReduction / Eisenstein
    // Human-readable witness: the violated condition, a p-th root, or a
    // nontrivial factor. Required for Reducible verdicts from the binomial
    // criterion or an explicit factorization.
    std::string witness;

    bool irreducible() const { return verdict == IrredVerdict::Irreducible; }
    bool reducible() const { return verdict == IrredVerdict::Reducible; }
};

// X^d + a over Q: irreducible iff a avoids -Q^p for every prime p | d and
// avoids 4Q^4 when 4 | d. d >= 2, a != 0.
IrreducibilityCertificate binomial_irred_q(uint64_t d, const Rat& a);

// x^t - b over F_q: irreducible iff rad(t) | q-1, b is rad(t)-free, and
// q = 1 (mod 4) when 4 | t. t >= 2.
IrreducibilityCertificate binomial_irred_fq(const FieldCtx& F, uint64_t t, const FieldElem& b);

// X^d + a over Q(t) with a in Q[t]: the -K^p test splits into "every
// multiplicity in the squarefree decomposition of -a divisible by p" plus
// "the remaining rational unit a p-th power in Q"; same split for the 4K^4
// condition. d >= 2, a != 0.
IrreducibilityCertificate binomial_irred_ft(uint64_t d, const QPoly& a);

// Rabin's test: f monic of degree n is irreducible over F_q iff
// z^{q^n} = z (mod f) and gcd(z^{q^{n/l}} - z, f) = 1 for every prime l | n.
IrreducibilityCertificate rabin_irred_fq(const FieldCtx& F, const Poly<FqRing>& f);
bool rabin_irreducible(const FieldCtx& F, const Poly<FqRing>& f);

// Semi-decision over Q for a primitive integer polynomial: Eisenstein at
// the primes dividing the non-leading content (direct and reversed), then
// reduction mod each budget prime (squarefree + Rabin-irreducible mod p
// certifies). Never claims Reducible; failure is Inconclusive.
IrreducibilityCertificate certify_irred_q(const ZPoly& f,
                                          std::vector<uint64_t> prime_budget = {});

// First `count` primes p with p not dividing lc(f) and f mod p squarefree.
std::vector<uint64_t> default_prime_budget(const ZPoly& f, size_t count = 25);

}  // namespace invstab

#endif
