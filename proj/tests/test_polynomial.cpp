#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "invstab/polynomial.hpp"

using namespace invstab;

namespace {

const RatRing Q;

QPoly P(std::vector<long> coeffs) { return qpoly_from_int_coeffs(coeffs); }

}  // namespace

TEST_CASE("basic arithmetic over Q[t]") {
    const QPoly t1 = P({1, 1});
    CHECK(poly_eq(Q, poly_mul(Q, t1, t1), P({1, 2, 1})));
    CHECK(poly_eq(Q, poly_pow(Q, t1, 3), P({1, 3, 3, 1})));
    CHECK(poly_eq(Q, poly_sub(Q, P({0, 0, 1}), P({1})), P({-1, 0, 1})));
    CHECK(poly_eval(Q, P({1, 2, 3}), Rat(2)) == Rat(17));
    CHECK(poly_eq(Q, poly_derivative(Q, P({5, 0, 3, 2})), P({0, 6, 6})));
    CHECK(poly_eq(Q, poly_compose(Q, P({0, 0, 1}), t1), P({1, 2, 1})));
    CHECK(P({}).deg() == -1);
    CHECK(P({7}).deg() == 0);
}

TEST_CASE("euclidean division and gcd") {
    const QPoly f = P({-1, 0, 0, 0, 1});  // t^4 - 1
    const QPoly g = P({-1, 0, 1});        // t^2 - 1
    auto [q, r] = poly_divmod(Q, f, g);
    CHECK(poly_eq(Q, poly_add(Q, poly_mul(Q, q, g), r), f));
    CHECK(r.is_zero());

    CHECK(poly_eq(Q, poly_gcd(Q, P({-1, 0, 1}), P({1, 2, 1})), P({1, 1})));
    CHECK(poly_eq(Q, poly_gcd(Q, P({1, 1}), P({})), P({1, 1})));
    CHECK_THROWS_AS(poly_divmod(Q, f, P({})), division_by_zero);
}

TEST_CASE("random division property") {
    std::mt19937_64 rng(7);
    auto rand_poly = [&](int maxdeg) {
        std::vector<long> c(static_cast<size_t>(rng() % (maxdeg + 1)) + 1);
        for (auto& x : c) x = static_cast<long>(rng() % 19) - 9;
        return P(c);
    };
    for (int trial = 0; trial < 200; ++trial) {
        const QPoly f = rand_poly(8);
        const QPoly g = rand_poly(5);
        if (g.is_zero()) continue;
        auto [q, r] = poly_divmod(Q, f, g);
        CHECK(poly_eq(Q, poly_add(Q, poly_mul(Q, q, g), r), f));
        CHECK(r.deg() < g.deg());
    }
}

TEST_CASE("Yun squarefree decomposition") {
    // 6 (t+1)^2 (t-2)^3
    const QPoly f = poly_scale(
        Q, poly_mul(Q, poly_pow(Q, P({1, 1}), 2), poly_pow(Q, P({-2, 1}), 3)), Rat(6));
    const auto dec = yun_squarefree(f);
    CHECK(dec.unit == Rat(6));
    REQUIRE(dec.parts.size() == 2);
    CHECK(poly_eq(Q, dec.parts[0].first, P({1, 1})));
    CHECK(dec.parts[0].second == 2);
    CHECK(poly_eq(Q, dec.parts[1].first, P({-2, 1})));
    CHECK(dec.parts[1].second == 3);

    // reassemble
    QPoly prod = poly_const(Q, dec.unit);
    for (const auto& [part, mult] : dec.parts)
        prod = poly_mul(Q, prod, poly_pow(Q, part, static_cast<uint64_t>(mult)));
    CHECK(poly_eq(Q, prod, f));
}

TEST_CASE("distinct root count") {
    CHECK(n0_distinct_roots(P({0, 0, 1})) == 1);               // t^2
    CHECK(n0_distinct_roots(P({-1, 0, 1})) == 2);              // (t-1)(t+1)
    CHECK(n0_distinct_roots(poly_pow(Q, P({1, 1}), 5)) == 1);  // (t+1)^5
    CHECK(n0_distinct_roots(P({3})) == 0);
}

TEST_CASE("p-th and k-th power detection up to unit") {
    Rat unit;
    QPoly root;
    CHECK(is_pth_power_up_to_unit_ft(poly_scale(Q, poly_pow(Q, P({1, 1}), 3), Rat(2)), 3,
                                     &unit, &root));
    CHECK(unit == Rat(2));
    CHECK(poly_eq(Q, root, P({1, 1})));
    CHECK(!is_pth_power_up_to_unit_ft(P({0, 1, 1}), 2));
    CHECK(poly_is_kth_power_up_to_unit(poly_pow(Q, P({1, 0, 1}), 2), 2));
    CHECK(poly_is_kth_power_up_to_unit(P({5}), 4));  // constants are trivial powers
    CHECK(!poly_is_kth_power_up_to_unit(P({0, 1}), 2));
}

TEST_CASE("Mason-Stothers check") {
    // equality case: t^2 + (2t + 1) = (t+1)^2
    CHECK(mason_stothers_check(P({0, 0, 1}), P({1, 2}), P({1, 2, 1})));
    // violated preconditions
    CHECK_THROWS_AS(mason_stothers_check(P({0, 0, 1}), P({1, 2}), P({1, 1})), invalid_input);
    CHECK_THROWS_AS(mason_stothers_check(P({1}), P({1}), P({2})), invalid_input);
    CHECK_THROWS_AS(
        mason_stothers_check(P({0, 1}), P({0, 1}), P({0, 2})), invalid_input);  // not coprime
}

TEST_CASE("primitive integer form") {
    const QPoly f = poly_from(Q, {Rat(3, 2), Rat(9, 4)});  // (3/4)(2 + 3t)
    auto [g, cont] = to_primitive_int(f);
    CHECK(cont == Rat(3, 4));
    REQUIRE(g.c.size() == 2);
    CHECK(g.c[0] == Int(2));
    CHECK(g.c[1] == Int(3));
}

TEST_CASE("powmod over a modulus") {
    const QPoly m = P({1, 0, 1});  // t^2 + 1
    const QPoly t = P({0, 1});
    // t^4 = 1 mod t^2 + 1
    CHECK(poly_eq(Q, poly_powmod(Q, t, Int(4), m), P({1})));
    CHECK(poly_eq(Q, poly_powmod(Q, t, Int(2), m), P({-1})));
}
