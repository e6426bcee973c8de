#ifndef INVSTAB_FINITE_FIELD_HPP
#define INVSTAB_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "invstab/scalars.hpp"

namespace invstab {

// Element of F_{p^k}: coefficient vector of length k over F_p, each entry
// reduced mod p. For prime fields (k = 1) this is a single residue.
struct FieldElem {
    std::vector<uint64_t> v;

    bool operator==(const FieldElem&) const = default;
};

// A prime field F_p or an extension F_{p^k} = F_p[z]/(modulus). Immutable
// after construction; the modulus is validated irreducible.
class FieldCtx {
public:
    static FieldCtx prime(uint64_t p);
    // Extension with an explicitly supplied monic modulus (coefficients of
    // z^0..z^k, leading coefficient 1). Irreducibility is validated.
    static FieldCtx extension(uint64_t p, const std::vector<uint64_t>& modulus);
    // Extension of degree k with an auto-found modulus: binomials z^k - b
    // are scanned first, then all monic polynomials.
    static FieldCtx extension(uint64_t p, uint32_t k);

    uint64_t p() const { return p_; }
    uint32_t k() const { return k_; }
    // q = p^k; throws size_limit_error if it does not fit in 64 bits.
    uint64_t q() const;
    Int q_int() const;
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(const Int& a) const;   // image of an integer
    FieldElem from_int(int64_t a) const;
    FieldElem elem(std::vector<uint64_t> coeffs) const;  // reduces mod p

    bool is_zero(const FieldElem& a) const;
    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;  // throws division_by_zero on 0
    FieldElem pow(const FieldElem& a, const Int& e) const;  // e >= 0

    // Enumeration helpers: bijection between F_q and {0, ..., q-1}.
    uint64_t index_of(const FieldElem& a) const;
    FieldElem from_index(uint64_t idx) const;

    std::string to_string(const FieldElem& a) const;

private:
    FieldCtx(uint64_t p, uint32_t k, std::vector<uint64_t> modulus);

    uint64_t p_ = 0;
    uint32_t k_ = 1;
    std::vector<uint64_t> modulus_;  // empty for k == 1
};

// True iff alpha^{(q-1)/l} != 1 for every prime l | m; equivalent to the
// quantifier definition "alpha = beta^e with e | m implies e = 1".
// Requires alpha != 0 and m | q-1.
bool is_m_free(const FieldCtx& F, const FieldElem& alpha, uint64_t m);

// Norm from F_{p^k} down to F_p: alpha^{(q-1)/(p-1)}, equal to the product
// of the Frobenius conjugates. The result is asserted to lie in the prime
// field and returned as an element of `base`.
FieldElem ext_norm(const FieldCtx& ext, const FieldElem& alpha);

// Ring adapter so the generic polynomial templates can run over F_q.
struct FqRing {
    const FieldCtx* F;

    using Elem = FieldElem;
    explicit FqRing(const FieldCtx& ctx) : F(&ctx) {}

    Elem zero() const { return F->zero(); }
    Elem one() const { return F->one(); }
    Elem add(const Elem& a, const Elem& b) const { return F->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return F->sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return F->mul(a, b); }
    Elem neg(const Elem& a) const { return F->neg(a); }
    Elem inv(const Elem& a) const { return F->inv(a); }
    bool is_zero(const Elem& a) const { return F->is_zero(a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(int64_t a) const { return F->from_int(a); }
    uint64_t characteristic() const { return F->p(); }
};

}  // namespace invstab

#endif
