#ifndef INVSTAB_BINOMIAL_NORM_HPP
#define INVSTAB_BINOMIAL_NORM_HPP

#include "invstab/finite_field.hpp"

namespace invstab {

// F_p[gamma] with gamma^d = -m, built from an irreducible binomial z^d + m.
// The extension context validates irreducibility on construction.
struct BinomialExtension {
    FieldCtx base;
    FieldCtx ext;
    uint64_t d = 0;
    FieldElem m;  // base element; modulus is z^d + m

    static BinomialExtension make(uint64_t p, uint64_t d, uint64_t m);

    // a*gamma + b as an element of the extension.
    FieldElem mobius_part(const FieldElem& a, const FieldElem& b) const;
};

// Norm down to the base of the Moebius value (a gamma + b)/(e gamma + t),
// by the closed form (b^d + (-1)^d m a^d)/(t^d + (-1)^d m e^d). The same
// value is recomputed as a quotient of Frobenius-product norms and the two
// routes are asserted equal. Requires a e != 0; a vanishing closed-form
// denominator means e gamma + t = 0 and is rejected.
FieldElem norm_mobius(const BinomialExtension& E, const FieldElem& a, const FieldElem& b,
                      const FieldElem& e, const FieldElem& t);

}  // namespace invstab

#endif
