#include "invstab/polynomial.hpp"

namespace invstab {

namespace {
const RatRing QQ;
}

SquarefreeDecomposition yun_squarefree(const QPoly& f) {
    if (f.is_zero()) throw invalid_input("yun_squarefree: zero polynomial");
    SquarefreeDecomposition out;
    out.unit = poly_lc(QQ, f);
    if (f.deg() == 0) return out;

    const QPoly fm = poly_make_monic(QQ, f);
    const QPoly df = poly_derivative(QQ, fm);
    QPoly g = poly_gcd(QQ, fm, df);
    QPoly c = poly_div_exact(QQ, fm, g);
    QPoly d = poly_sub(QQ, poly_div_exact(QQ, df, g), poly_derivative(QQ, c));
    int mult = 1;
    while (c.deg() > 0) {
        QPoly part = poly_gcd(QQ, c, d);
        if (part.deg() > 0) out.parts.emplace_back(part, mult);
        c = poly_div_exact(QQ, c, part);
        d = poly_sub(QQ, poly_div_exact(QQ, d, part), poly_derivative(QQ, c));
        ++mult;
    }
    return out;
}

long n0_distinct_roots(const QPoly& f) {
    if (f.is_zero()) throw invalid_input("n0_distinct_roots: zero polynomial");
    if (f.deg() == 0) return 0;
    const QPoly g = poly_gcd(QQ, f, poly_derivative(QQ, f));
    return f.deg() - g.deg();
}

bool poly_is_kth_power_up_to_unit(const QPoly& f, uint64_t k, Rat* unit_out, QPoly* root_out) {
    if (k == 0) throw invalid_input("poly_is_kth_power_up_to_unit: k must be positive");
    if (f.is_zero()) throw invalid_input("poly_is_kth_power_up_to_unit: zero polynomial");
    const auto dec = yun_squarefree(f);
    QPoly root = poly_const(QQ, Rat(1));
    for (const auto& [part, mult] : dec.parts) {
        if (static_cast<uint64_t>(mult) % k != 0) return false;
        root = poly_mul(QQ, root, poly_pow(QQ, part, static_cast<uint64_t>(mult) / k));
    }
    if (unit_out) *unit_out = dec.unit;
    if (root_out) *root_out = root;
    return true;
}

bool is_pth_power_up_to_unit_ft(const QPoly& f, uint64_t p, Rat* unit_out, QPoly* root_out) {
    if (!is_prime_u64(p)) throw invalid_input("is_pth_power_up_to_unit_ft: p must be prime");
    return poly_is_kth_power_up_to_unit(f, p, unit_out, root_out);
}

bool mason_stothers_check(const QPoly& a, const QPoly& b, const QPoly& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw invalid_input("mason_stothers_check: zero polynomial in the triple");
    if (!poly_eq(QQ, poly_add(QQ, a, b), c))
        throw invalid_input("mason_stothers_check: a + b != c");
    if (poly_gcd(QQ, a, b).deg() > 0 || poly_gcd(QQ, a, c).deg() > 0 ||
        poly_gcd(QQ, b, c).deg() > 0)
        throw invalid_input("mason_stothers_check: triple is not pairwise coprime");
    if (a.deg() == 0 && b.deg() == 0 && c.deg() == 0)
        throw invalid_input("mason_stothers_check: all three polynomials are constant");
    const long maxdeg = std::max({a.deg(), b.deg(), c.deg()});
    const long n0 = n0_distinct_roots(poly_mul(QQ, poly_mul(QQ, a, b), c));
    return maxdeg <= n0 - 1;
}

std::pair<ZPoly, Rat> to_primitive_int(const QPoly& f) {
    if (f.is_zero()) throw invalid_input("to_primitive_int: zero polynomial");
    Int den_lcm(1);
    for (const auto& e : f.c) {
        Int d(e.get_den());
        Int g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    ZPoly h;
    h.c.reserve(f.c.size());
    Int content(0);
    for (const auto& e : f.c) {
        Int v = Int(e.get_num()) * (den_lcm / Int(e.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        h.c.push_back(std::move(v));
    }
    if (sgn(h.c.back()) < 0) content = -content;
    for (auto& v : h.c) v /= content;
    Rat cont(content, den_lcm);
    cont.canonicalize();
    return {std::move(h), cont};
}

QPoly qpoly_from_int_coeffs(const std::vector<long>& coeffs) {
    QPoly f;
    f.c.reserve(coeffs.size());
    for (long v : coeffs) f.c.push_back(Rat(v));
    poly_trim(QQ, f);
    return f;
}

}  // namespace invstab
