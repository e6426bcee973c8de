#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invstab/norm_sequence.hpp"

using namespace invstab;

TEST_CASE("x-sequence over Z: d = 3, c = 2") {
    const IntRing Z;
    const auto xs = sequence_terms(Z, 3, Int(2), 4);
    REQUIRE(xs.size() == 4);
    CHECK(xs[0] == Int(2));
    CHECK(xs[1] == Int(-17));  // (-1)^3 (2^4 + 1)
    CHECK(xs[2] == Int(10338));  // -2 (-17)^3 + 2^9
    // x_4 = -2 x_3^3 + x_2^9
    Int x2_9;
    mpz_pow_ui(x2_9.get_mpz_t(), Int(-17).get_mpz_t(), 9);
    Int x3_3;
    mpz_pow_ui(x3_3.get_mpz_t(), Int(10338).get_mpz_t(), 3);
    CHECK(xs[3] == Int(-2) * x3_3 + x2_9);
}

TEST_CASE("x-sequence over Z: d = 2, c = 3") {
    const IntRing Z;
    const auto xs = sequence_terms(Z, 2, Int(3), 3);
    CHECK(xs[0] == Int(3));
    CHECK(xs[1] == Int(28));  // (+1)(3^3 + 1)
    CHECK(xs[2] == Int(3 * 28 * 28 + 81));  // 3 x_2^2 + x_1^4 = 2433
}

TEST_CASE("matrix recurrence: d = 2, c = 3") {
    const IntRing Z;
    auto st = mat_initial(Z, Int(3));
    CHECK(st.x == Int(3));
    CHECK(st.y == Int(-1));
    CHECK(st.z == Int(1));
    CHECK(st.w == Int(0));

    st = mat_next(Z, st, 2, Int(3));
    CHECK(st.j == 2);
    CHECK(st.x == Int(28));  // 3*9 + 1
    CHECK(st.y == Int(-9));
    CHECK(st.z == Int(3));
    CHECK(st.w == Int(-1));

    // bottom row lags the top: z_{n+1} = (-1)^d x_n
    auto nxt = mat_next(Z, st, 2, Int(3));
    CHECK(nxt.z == st.x);
}

TEST_CASE("identity report: exact identities hold for non-unit c") {
    for (uint64_t d : {2ull, 3ull}) {
        for (long c : {2l, 3l, 5l, 6l, 7l}) {
            const auto rep = check_sequence_identities(d, Int(c), 5);
            INFO("d = ", d, ", c = ", c);
            CHECK(rep.all_ok());
            for (const auto& item : rep.items) CHECK(!item.skipped);
        }
    }
}

TEST_CASE("identity report: unit c skips the divisibility block") {
    const auto rep = check_sequence_identities(2, Int(1), 3);
    bool any_skipped = false;
    for (const auto& item : rep.items) any_skipped = any_skipped || item.skipped;
    CHECK(any_skipped);
    CHECK(rep.all_ok());  // non-skipped identities still hold
}

TEST_CASE("identity report: c a perfect power skips the power-freeness item") {
    const auto rep = check_sequence_identities(2, Int(4), 3);
    for (const auto& item : rep.items) {
        if (item.name == "x_{2n-1} not in uZ^p") CHECK(item.skipped);
    }
}

TEST_CASE("negative c") {
    const auto rep = check_sequence_identities(3, Int(-5), 4);
    CHECK(rep.all_ok());
}

TEST_CASE("pair scan oracle: F_5, d = 2, c = 2") {
    const FieldCtx F = FieldCtx::prime(5);
    const auto scan = pair_cycle_scan(F, 2, F.from_int(2));
    REQUIRE(scan.status == PairScan::Cycle);
    CHECK(scan.preperiod == 1);
    CHECK(scan.period == 2);
    REQUIRE(scan.ratios.size() == 3);
    CHECK(scan.ratios[0] == F.from_int(2));
    CHECK(scan.ratios[1] == F.from_int(2));
    CHECK(scan.ratios[2] == F.from_int(3));
}

TEST_CASE("pair scan oracle: F_17, d = 8, c = 5 follows the closed pattern") {
    // x-sequence: c, 1 - c, c + 1, 1 - c, c + 1, ...
    const FieldCtx F = FieldCtx::prime(17);
    for (long c : {5l, 10l}) {
        const auto scan = pair_cycle_scan(F, 8, F.from_int(c));
        REQUIRE(scan.status == PairScan::Cycle);
        CHECK(scan.preperiod == 1);
        CHECK(scan.period == 2);
        REQUIRE(scan.terms.size() >= 4);
        CHECK(scan.terms[0] == F.from_int(c));
        CHECK(scan.terms[1] == F.from_int(1 - c));
        CHECK(scan.terms[2] == F.from_int(c + 1));
        CHECK(scan.terms[3] == F.from_int(1 - c));
    }
}

TEST_CASE("pair scan terms satisfy the recurrence and match ratios") {
    const FieldCtx F = FieldCtx::prime(13);
    const FieldElem c = F.from_int(3);
    const uint64_t d = 3;
    const auto scan = pair_cycle_scan(F, d, c);
    REQUIRE(scan.status == PairScan::Cycle);
    const FieldElem sign = F.neg(F.one());
    for (size_t n = 0; n + 2 < scan.terms.size(); ++n) {
        const FieldElem next = F.add(
            F.mul(sign, F.mul(c, F.pow(scan.terms[n + 1], Int(3)))),
            F.pow(scan.terms[n], Int(9)));
        CHECK(scan.terms[n + 2] == next);
    }
    for (size_t n = 0; n < scan.ratios.size(); ++n)
        CHECK(F.mul(scan.ratios[n], scan.terms[n]) == scan.terms[n + 1]);
}

TEST_CASE("cap exceeded reported") {
    const FieldCtx F = FieldCtx::prime(101);
    const auto scan = pair_cycle_scan(F, 2, F.from_int(3), 2);
    CHECK(scan.status == PairScan::CapExceeded);
}

TEST_CASE("size guard on the integer sequence") {
    const IntRing Z;
    IterateLimits tight;
    tight.max_total_digits = 100;
    CHECK_THROWS_AS(sequence_terms(Z, 3, Int(5), 12, tight), size_limit_error);
}
