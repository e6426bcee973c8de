#include "invstab/irreducibility.hpp"

#include <sstream>

namespace invstab {

namespace {

std::string rat_str(const Rat& x) {
    return x.get_str();
}

std::string qpoly_str(const QPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (sgn(f.c[i]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || f.c[i] != 1) os << rat_str(f.c[i]);
        if (i > 0) {
            if (f.c[i] != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// Trial-division prime factors of |n|; a leftover cofactor that passes the
// 64-bit primality test is included, anything larger is dropped (the caller
// is a semi-decision and can afford to miss exotic Eisenstein primes).
std::vector<uint64_t> small_prime_factors(Int n) {
    std::vector<uint64_t> out;
    n = abs(n);
    if (n <= 1) return out;
    for (uint64_t p = 2; p <= 1000000 && Int(static_cast<unsigned long>(p)) * Int(static_cast<unsigned long>(p)) <= n; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.push_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p))
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1 && mpz_fits_ulong_p(n.get_mpz_t()) && is_prime_u64(n.get_ui()))
        out.push_back(n.get_ui());
    return out;
}

Poly<FqRing> reduce_mod_p(const FieldCtx& F, const ZPoly& f) {
    FqRing r(F);
    Poly<FqRing> g;
    g.c.reserve(f.c.size());
    for (const auto& c : f.c) g.c.push_back(F.from_int(c));
    poly_trim(r, g);
    return g;
}

bool squarefree_mod_p(const FieldCtx& F, const Poly<FqRing>& f) {
    FqRing r(F);
    if (f.deg() < 1) return false;
    const auto df = poly_derivative(r, f);
    if (df.is_zero()) return false;
    return poly_gcd(r, f, df).deg() == 0;
}

std::optional<IrreducibilityCertificate> eisenstein_at(const ZPoly& f) {
    // Candidate primes divide every non-leading coefficient.
    Int g(0);
    for (size_t i = 0; i + 1 < f.c.size(); ++i)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.c[i].get_mpz_t());
    if (g <= 1) return std::nullopt;
    for (uint64_t p : small_prime_factors(g)) {
        const Int pz(static_cast<unsigned long>(p));
        if (mpz_divisible_p(f.c.back().get_mpz_t(), pz.get_mpz_t())) continue;
        if (sgn(f.c.front()) == 0) continue;
        if (mpz_divisible_p(f.c.front().get_mpz_t(), Int(pz * pz).get_mpz_t())) continue;
        IrreducibilityCertificate cert;
        cert.verdict = IrredVerdict::Irreducible;
        cert.method = IrredMethod::Eisenstein;
        cert.certifying_prime = p;
        return cert;
    }
    return std::nullopt;
}

}  // namespace

IrreducibilityCertificate binomial_irred_q(uint64_t d, const Rat& a) {
    if (d < 2) throw invalid_input("binomial_irred_q: d must be >= 2");
    if (sgn(a) == 0) throw invalid_input("binomial_irred_q: a must be nonzero");
    IrreducibilityCertificate cert;
    cert.method = IrredMethod::BinomialCriterion;
    for (uint64_t p : prime_divisors_u64(d)) {
        if (auto root = rat_kth_root(Rat(-a), p)) {
            cert.verdict = IrredVerdict::Reducible;
            cert.witness = "-a = (" + rat_str(*root) + ")^" + std::to_string(p);
            return cert;
        }
    }
    if (d % 4 == 0) {
        if (auto root = rat_kth_root(Rat(a / 4), 4)) {
            cert.verdict = IrredVerdict::Reducible;
            cert.witness = "a = 4*(" + rat_str(*root) + ")^4";
            return cert;
        }
    }
    cert.verdict = IrredVerdict::Irreducible;
    return cert;
}

IrreducibilityCertificate binomial_irred_fq(const FieldCtx& F, uint64_t t, const FieldElem& b) {
    if (t < 2) throw invalid_input("binomial_irred_fq: t must be >= 2");
    IrreducibilityCertificate cert;
    cert.method = IrredMethod::BinomialCriterion;
    if (F.is_zero(b)) {
        cert.verdict = IrredVerdict::Reducible;
        cert.witness = "b = 0: x^t has the factor x";
        return cert;
    }
    const uint64_t rad = radical_u64(t);
    const Int q1 = F.q_int() - 1;
    if (!mpz_divisible_ui_p(q1.get_mpz_t(), rad)) {
        cert.verdict = IrredVerdict::Reducible;
        cert.witness = "rad(t) = " + std::to_string(rad) + " does not divide q - 1";
        return cert;
    }
    if (t % 4 == 0 && mpz_fdiv_ui(F.q_int().get_mpz_t(), 4) != 1) {
        cert.verdict = IrredVerdict::Reducible;
        cert.witness = "4 | t but q != 1 (mod 4)";
        return cert;
    }
    if (!is_m_free(F, b, rad)) {
        cert.verdict = IrredVerdict::Reducible;
        cert.witness = "b = " + F.to_string(b) + " is not rad(t)-free, rad(t) = " + std::to_string(rad);
        return cert;
    }
    cert.verdict = IrredVerdict::Irreducible;
    return cert;
}

IrreducibilityCertificate binomial_irred_ft(uint64_t d, const QPoly& a) {
    if (d < 2) throw invalid_input("binomial_irred_ft: d must be >= 2");
    if (a.is_zero()) throw invalid_input("binomial_irred_ft: a must be nonzero");
    IrreducibilityCertificate cert;
    cert.method = IrredMethod::BinomialCriterion;
    const RatRing QQ;
    const QPoly minus_a = poly_neg(QQ, a);
    for (uint64_t p : prime_divisors_u64(d)) {
        Rat unit;
        QPoly root;
        // -a in K^p iff the polynomial part is a p-th power and the leftover
        // rational unit is one as well (units of Q[t] are Q^*).
        if (poly_is_kth_power_up_to_unit(minus_a, p, &unit, &root)) {
            if (auto uroot = rat_kth_root(unit, p)) {
                cert.verdict = IrredVerdict::Reducible;
                cert.witness = "-a = (" + qpoly_str(poly_scale(QQ, root, *uroot)) + ")^" + std::to_string(p);
                return cert;
            }
        }
    }
    if (d % 4 == 0) {
        Rat unit;
        QPoly root;
        if (poly_is_kth_power_up_to_unit(a, 4, &unit, &root)) {
            if (auto uroot = rat_kth_root(Rat(unit / 4), 4)) {
                cert.verdict = IrredVerdict::Reducible;
                cert.witness = "a = 4*(" + qpoly_str(poly_scale(QQ, root, *uroot)) + ")^4";
                return cert;
            }
        }
    }
    cert.verdict = IrredVerdict::Irreducible;
    return cert;
}

bool rabin_irreducible(const FieldCtx& F, const Poly<FqRing>& f) {
    FqRing r(F);
    const long n = f.deg();
    if (n < 1) return false;
    if (n == 1) return true;
    Poly<FqRing> fm = poly_make_monic(r, f);
    const Poly<FqRing> x = poly_monomial(r, F.one(), 1);
    const Int q = F.q_int();

    Int qn;
    mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
    if (!poly_eq(r, poly_powmod(r, x, qn, fm), poly_mod(r, x, fm))) return false;

    for (uint64_t l : prime_divisors_u64(static_cast<uint64_t>(n))) {
        Int qe;
        mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n / static_cast<long>(l)));
        const auto h = poly_sub(r, poly_powmod(r, x, qe, fm), poly_mod(r, x, fm));
        if (h.is_zero()) return false;
        if (poly_gcd(r, h, fm).deg() != 0) return false;
    }
    return true;
}

IrreducibilityCertificate rabin_irred_fq(const FieldCtx& F, const Poly<FqRing>& f) {
    IrreducibilityCertificate cert;
    cert.method = IrredMethod::Rabin;
    if (f.deg() < 1) throw invalid_input("rabin_irred_fq: degree must be >= 1");
    cert.verdict = rabin_irreducible(F, f) ? IrredVerdict::Irreducible : IrredVerdict::Reducible;
    return cert;
}

std::vector<uint64_t> default_prime_budget(const ZPoly& f, size_t count) {
    std::vector<uint64_t> out;
    for (uint64_t p = 2; out.size() < count && p < 100000; p = (p == 2 ? 3 : p + 2)) {
        if (!is_prime_u64(p)) continue;
        if (mpz_divisible_ui_p(f.c.back().get_mpz_t(), p)) continue;
        const FieldCtx F = FieldCtx::prime(p);
        const auto fp = reduce_mod_p(F, f);
        if (fp.deg() != f.deg()) continue;
        if (!squarefree_mod_p(F, fp)) continue;
        out.push_back(p);
    }
    return out;
}

IrreducibilityCertificate certify_irred_q(const ZPoly& f, std::vector<uint64_t> prime_budget) {
    if (f.deg() < 1) throw invalid_input("certify_irred_q: degree must be >= 1");
    Int content(0);
    for (const auto& c : f.c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content != 1) throw invalid_input("certify_irred_q: input must be primitive");

    if (auto e = eisenstein_at(f)) return *e;
    // Eisenstein can also apply to the reversal when the constant term is
    // nonzero (irreducibility is preserved under z -> 1/z up to units).
    if (sgn(f.c.front()) != 0) {
        ZPoly rev;
        rev.c.assign(f.c.rbegin(), f.c.rend());
        if (auto e = eisenstein_at(rev)) {
            e->witness = "applies to the reversed polynomial";
            return *e;
        }
    }

    if (prime_budget.empty()) prime_budget = default_prime_budget(f);
    for (uint64_t p : prime_budget) {
        if (mpz_divisible_ui_p(f.c.back().get_mpz_t(), p)) continue;
        const FieldCtx F = FieldCtx::prime(p);
        const auto fp = reduce_mod_p(F, f);
        if (fp.deg() != f.deg()) continue;
        if (!squarefree_mod_p(F, fp)) continue;
        if (rabin_irreducible(F, fp)) {
            IrreducibilityCertificate cert;
            cert.verdict = IrredVerdict::Irreducible;
            cert.method = IrredMethod::ModPReduction;
            cert.certifying_prime = p;
            return cert;
        }
    }
    IrreducibilityCertificate cert;
    cert.verdict = IrredVerdict::Inconclusive;
    cert.method = IrredMethod::ModPReduction;
    cert.witness = "no budget prime certified irreducibility";
    return cert;
}

}  // namespace invstab
