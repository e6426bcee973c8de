#include "invstab/finite_field.hpp"

#include <sstream>

#include "invstab/irreducibility.hpp"

namespace invstab {

namespace {

constexpr uint64_t kModulusCeiling = uint64_t(1) << 62;

uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    if (s >= p) s -= p;
    return s;
}

uint64_t submod(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

}  // namespace

FieldCtx::FieldCtx(uint64_t p, uint32_t k, std::vector<uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {}

FieldCtx FieldCtx::prime(uint64_t p) {
    if (p >= kModulusCeiling || !is_prime_u64(p))
        throw invalid_input("FieldCtx: characteristic must be a prime below 2^62");
    return FieldCtx(p, 1, {});
}

FieldCtx FieldCtx::extension(uint64_t p, const std::vector<uint64_t>& modulus) {
    FieldCtx base = prime(p);
    if (modulus.size() < 2) throw invalid_input("FieldCtx: modulus must have degree >= 1");
    std::vector<uint64_t> m = modulus;
    for (auto& c : m) c %= p;
    if (m.back() != 1) throw invalid_input("FieldCtx: modulus must be monic");
    const uint32_t k = static_cast<uint32_t>(m.size() - 1);
    if (k == 1) return base;

    FqRing r(base);
    Poly<FqRing> f;
    f.c.reserve(m.size());
    for (uint64_t c : m) f.c.push_back(FieldElem{{c}});
    if (!rabin_irreducible(base, f))
        throw invalid_input("FieldCtx: modulus is reducible over the base field");
    return FieldCtx(p, k, std::move(m));
}

FieldCtx FieldCtx::extension(uint64_t p, uint32_t k) {
    FieldCtx base = prime(p);
    if (k == 0) throw invalid_input("FieldCtx: extension degree must be >= 1");
    if (k == 1) return base;

    FqRing r(base);
    // Binomials z^k - b first; they exist for many (p, k) and keep the
    // modulus sparse.
    for (uint64_t b = 1; b < p; ++b) {
        std::vector<uint64_t> m(k + 1, 0);
        m[0] = p - b;
        m[k] = 1;
        Poly<FqRing> f;
        for (uint64_t c : m) f.c.push_back(FieldElem{{c}});
        if (rabin_irreducible(base, f)) return FieldCtx(p, k, std::move(m));
    }
    // Fall back to scanning all monic polynomials of degree k.
    Int total = 1;
    for (uint32_t i = 0; i < k; ++i) total *= Int(static_cast<unsigned long>(p));
    for (Int idx(0); idx < total; ++idx) {
        std::vector<uint64_t> m(k + 1, 0);
        Int rem = idx;
        for (uint32_t i = 0; i < k; ++i) {
            m[i] = mpz_fdiv_ui(rem.get_mpz_t(), p);
            rem /= Int(static_cast<unsigned long>(p));
        }
        m[k] = 1;
        Poly<FqRing> f;
        for (uint64_t c : m) f.c.push_back(FieldElem{{c}});
        if (rabin_irreducible(base, f)) return FieldCtx(p, k, std::move(m));
    }
    throw invalid_input("FieldCtx: no irreducible modulus found");  // unreachable
}

uint64_t FieldCtx::q() const {
    unsigned __int128 q = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        q *= p_;
        if (q > (static_cast<unsigned __int128>(1) << 63))
            throw size_limit_error("FieldCtx: q = p^k exceeds the 64-bit ceiling");
    }
    return static_cast<uint64_t>(q);
}

Int FieldCtx::q_int() const {
    Int q;
    mpz_ui_pow_ui(q.get_mpz_t(), p_, k_);
    return q;
}

FieldElem FieldCtx::zero() const { return FieldElem{std::vector<uint64_t>(k_, 0)}; }

FieldElem FieldCtx::one() const {
    auto e = zero();
    e.v[0] = 1;
    return e;
}

FieldElem FieldCtx::from_int(const Int& a) const {
    auto e = zero();
    e.v[0] = mpz_fdiv_ui(a.get_mpz_t(), p_);
    return e;
}

FieldElem FieldCtx::from_int(int64_t a) const { return from_int(Int(static_cast<long>(a))); }

FieldElem FieldCtx::elem(std::vector<uint64_t> coeffs) const {
    if (coeffs.size() > k_) throw invalid_input("FieldCtx::elem: too many coefficients");
    coeffs.resize(k_, 0);
    for (auto& c : coeffs) c %= p_;
    return FieldElem{std::move(coeffs)};
}

bool FieldCtx::is_zero(const FieldElem& a) const {
    for (uint64_t c : a.v)
        if (c != 0) return false;
    return true;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem r = a;
    for (uint32_t i = 0; i < k_; ++i) r.v[i] = addmod(r.v[i], b.v[i], p_);
    return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem r = a;
    for (uint32_t i = 0; i < k_; ++i) r.v[i] = submod(r.v[i], b.v[i], p_);
    return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
    FieldElem r = a;
    for (auto& c : r.v) c = c == 0 ? 0 : p_ - c;
    return r;
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    if (k_ == 1) return FieldElem{{mulmod_u64(a.v[0], b.v[0], p_)}};
    std::vector<uint64_t> pr(2 * k_ - 1, 0);
    for (uint32_t i = 0; i < k_; ++i) {
        if (a.v[i] == 0) continue;
        for (uint32_t j = 0; j < k_; ++j)
            pr[i + j] = addmod(pr[i + j], mulmod_u64(a.v[i], b.v[j], p_), p_);
    }
    // Reduce by the monic modulus.
    for (uint32_t i = 2 * k_ - 2; i >= k_; --i) {
        const uint64_t c = pr[i];
        if (c == 0) continue;
        pr[i] = 0;
        for (uint32_t j = 0; j < k_; ++j)
            pr[i - k_ + j] = submod(pr[i - k_ + j], mulmod_u64(c, modulus_[j], p_), p_);
    }
    pr.resize(k_);
    return FieldElem{std::move(pr)};
}

FieldElem FieldCtx::pow(const FieldElem& a, const Int& e) const {
    if (sgn(e) < 0) throw invalid_input("FieldCtx::pow: negative exponent");
    FieldElem acc = one();
    if (sgn(e) == 0) return acc;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = mul(acc, acc);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = mul(acc, a);
    }
    return acc;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    if (is_zero(a)) throw division_by_zero("FieldCtx::inv: zero element");
    if (k_ == 1) return FieldElem{{powmod_u64(a.v[0], p_ - 2, p_)}};
    return pow(a, q_int() - 2);
}

uint64_t FieldCtx::index_of(const FieldElem& a) const {
    uint64_t idx = 0;
    for (uint32_t i = k_; i-- > 0;) idx = idx * p_ + a.v[i];
    return idx;
}

FieldElem FieldCtx::from_index(uint64_t idx) const {
    auto e = zero();
    for (uint32_t i = 0; i < k_; ++i) {
        e.v[i] = idx % p_;
        idx /= p_;
    }
    return e;
}

std::string FieldCtx::to_string(const FieldElem& a) const {
    if (k_ == 1) return std::to_string(a.v[0]);
    std::ostringstream os;
    os << "[";
    for (uint32_t i = 0; i < k_; ++i) {
        if (i) os << ",";
        os << a.v[i];
    }
    os << "]";
    return os.str();
}

bool is_m_free(const FieldCtx& F, const FieldElem& alpha, uint64_t m) {
    if (F.is_zero(alpha)) throw invalid_input("is_m_free: alpha must be nonzero");
    if (m == 0) throw invalid_input("is_m_free: m must be positive");
    const Int q1 = F.q_int() - 1;
    if (!mpz_divisible_ui_p(q1.get_mpz_t(), m))
        throw invalid_input("is_m_free: m must divide q - 1");
    for (uint64_t l : prime_divisors_u64(m)) {
        const Int e = q1 / Int(static_cast<unsigned long>(l));
        if (F.pow(alpha, e) == F.one()) return false;
    }
    return true;
}

FieldElem ext_norm(const FieldCtx& ext, const FieldElem& alpha) {
    const Int e = (ext.q_int() - 1) / Int(static_cast<unsigned long>(ext.p() - 1));
    FieldElem n = ext.is_zero(alpha) ? ext.zero() : ext.pow(alpha, e);
    for (uint32_t i = 1; i < ext.k(); ++i) {
        if (n.v[i] != 0) throw error("ext_norm: norm fell outside the base field");
    }
    return FieldElem{{n.v[0]}};
}

}  // namespace invstab
