#include "invstab/binomial_norm.hpp"

#include "invstab/errors.hpp"

namespace invstab {

BinomialExtension BinomialExtension::make(uint64_t p, uint64_t d, uint64_t m) {
    if (d < 2) throw invalid_input("BinomialExtension: d must be >= 2");
    if (d > 0xffffffffull) throw invalid_input("BinomialExtension: d too large");
    std::vector<uint64_t> modulus(d + 1, 0);
    modulus[0] = m % p;
    modulus[d] = 1;
    // FieldCtx::extension rejects reducible moduli, which settles gamma^d = -m.
    BinomialExtension E{FieldCtx::prime(p), FieldCtx::extension(p, modulus), d,
                        FieldElem{{m % p}}};
    return E;
}

FieldElem BinomialExtension::mobius_part(const FieldElem& a, const FieldElem& b) const {
    std::vector<uint64_t> v(ext.k(), 0);
    v[0] = b.v.at(0);
    v[1] = a.v.at(0);
    return ext.elem(std::move(v));
}

FieldElem norm_mobius(const BinomialExtension& E, const FieldElem& a, const FieldElem& b,
                      const FieldElem& e, const FieldElem& t) {
    const FieldCtx& F = E.base;
    if (F.is_zero(a) || F.is_zero(e))
        throw invalid_input("norm_mobius: requires a e != 0");

    const Int dz(static_cast<unsigned long>(E.d));
    const FieldElem sign = E.d % 2 == 0 ? F.one() : F.neg(F.one());
    const FieldElem num = F.add(F.pow(b, dz), F.mul(sign, F.mul(E.m, F.pow(a, dz))));
    const FieldElem den = F.add(F.pow(t, dz), F.mul(sign, F.mul(E.m, F.pow(e, dz))));
    if (F.is_zero(den))
        throw division_by_zero("norm_mobius: e gamma + t has zero norm");
    const FieldElem closed = F.mul(num, F.inv(den));

    const FieldElem frob = F.mul(ext_norm(E.ext, E.mobius_part(a, b)),
                                 F.inv(ext_norm(E.ext, E.mobius_part(e, t))));
    if (!(frob == closed))
        throw error("norm_mobius: closed form disagrees with the Frobenius product");
    return closed;
}

}  // namespace invstab
