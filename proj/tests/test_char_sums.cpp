#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "invstab/char_sums.hpp"

using namespace invstab;

TEST_CASE("quadratic character table matches the Legendre symbol") {
    for (uint64_t p : {3ull, 17ull, 29ull}) {
        const auto chi = quadratic_character_table(p);
        CHECK(chi[0] == 0);
        for (uint64_t a = 1; a < p; ++a)
            CHECK(chi[a] == legendre(Int(static_cast<long>(a)), p));
    }
    CHECK_THROWS_AS(quadratic_character_table(2), invalid_input);
    CHECK_THROWS_AS(quadratic_character_table(15), invalid_input);
}

TEST_CASE("quadratic sum closed form") {
    // p = 5, x^2 + 1: chi(1) + chi(2) + chi(0) + chi(0) + chi(2) = -1
    CHECK(quad_char_sum(5, 1, 0, 1) == -1);
    // degenerate discriminant: (x+1)^2 sums to chi(1)(p-1)
    CHECK(quad_char_sum(5, 1, 2, 1) == 4);
    CHECK(quad_char_sum(7, 3, 0, 0) == 6 * legendre(Int(3), 7));
    CHECK_THROWS_AS(quad_char_sum(5, 0, 1, 1), invalid_input);
    CHECK_THROWS_AS(quad_char_sum(5, 5, 1, 1), invalid_input);  // a = 0 mod p
}

TEST_CASE("cubic sum oracle: sum chi(x^3 - x) = -2 at p = 17") {
    const auto s = cubic_char_sum(17, {0, -1, 0, 1});
    CHECK(s.sum == -2);
    CHECK(s.weil_ok);
}

TEST_CASE("cubic sum preconditions") {
    CHECK_THROWS_AS(cubic_char_sum(5, {0, 0, 0, 1}), invalid_input);   // x^3, repeated root
    CHECK_THROWS_AS(cubic_char_sum(5, {0, 0, 0, 5}), invalid_input);   // lc vanishes mod p
    CHECK_THROWS_AS(cubic_char_sum(7, {0, 0, 7, 14}), invalid_input);  // lc vanishes mod p
}

TEST_CASE("family enumeration at p = 17") {
    const auto rep = enumerate_stable_family(17, true);
    CHECK(rep.n == 3);
    CHECK(rep.d == 8);
    CHECK(rep.count == 2);
    CHECK(rep.qualifying_c == std::vector<uint64_t>{5, 10});
    CHECK(rep.bound == 1);
    CHECK(rep.bound_ok);
    CHECK(rep.cubic_sum == -2);
    CHECK(rep.identity_ok);
    CHECK(rep.indicator_ok);
    REQUIRE(rep.verdicts.size() == 2);
    for (const auto& [c, v] : rep.verdicts) {
        CHECK(v.kind == VerdictKind::InverselyStable);
        CHECK((c == 5 || c == 10));
    }
}

TEST_CASE("family enumeration at p = 257") {
    const auto rep = enumerate_stable_family(257, false);
    CHECK(rep.n == 7);
    CHECK(rep.d == 128);
    CHECK(rep.count == 32);
    CHECK(rep.bound == 28);
    CHECK(rep.bound_ok);
    CHECK(rep.identity_ok);
    CHECK(rep.indicator_ok);
    CHECK(rep.verdicts.empty());
}

TEST_CASE("family shape validation") {
    CHECK_THROWS_AS(enumerate_stable_family(19, false), invalid_input);  // wrong shape
    CHECK_THROWS_AS(enumerate_stable_family(5, false), invalid_input);   // n = 1 < 3
    CHECK_THROWS_AS(enumerate_stable_family(16, false), invalid_input);  // not prime
}

TEST_CASE("qualifying c values have the defining character pattern") {
    const auto rep = enumerate_stable_family(257, false);
    const auto chi = quadratic_character_table(257);
    for (uint64_t c : rep.qualifying_c) {
        CHECK(chi[(c + 256) % 257] == 1);
        CHECK(chi[c] == -1);
        CHECK(chi[(c + 1) % 257] == -1);
    }
}

TEST_CASE("worker count honors INVSTAB_THREADS") {
    setenv("INVSTAB_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    setenv("INVSTAB_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    unsetenv("INVSTAB_THREADS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("threaded and single-threaded enumerations agree") {
    setenv("INVSTAB_THREADS", "4", 1);
    const auto par = enumerate_stable_family(17, true);
    setenv("INVSTAB_THREADS", "1", 1);
    const auto seq = enumerate_stable_family(17, true);
    unsetenv("INVSTAB_THREADS");
    REQUIRE(par.verdicts.size() == seq.verdicts.size());
    for (size_t i = 0; i < par.verdicts.size(); ++i) {
        CHECK(par.verdicts[i].first == seq.verdicts[i].first);
        CHECK(par.verdicts[i].second.kind == seq.verdicts[i].second.kind);
    }
}
