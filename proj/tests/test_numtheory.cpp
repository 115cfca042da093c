#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "rpe/numtheory.hpp"

using namespace rpe;

TEST_CASE("kronecker symbol: pinned values and the n = 2 branch") {
    CHECK(kronecker(Int(-163), Int(1)) == 1);
    CHECK(kronecker(Int(-163), Int(3)) == -1);
    CHECK(kronecker(Int(-3), Int(2)) == -1);
    CHECK(kronecker(Int(0), Int(1)) == 1);
    CHECK(kronecker(Int(0), Int(5)) == 0);
    CHECK(kronecker(Int(1), Int(0)) == 1);
    CHECK(kronecker(Int(2), Int(0)) == 0);
    // (a|2) is 0 for even a, +1 for a ≡ ±1, -1 for a ≡ ±3 (mod 8).
    CHECK(kronecker(Int(3), Int(2)) == -1);
    CHECK(kronecker(Int(5), Int(2)) == -1);
    CHECK(kronecker(Int(7), Int(2)) == 1);
    CHECK(kronecker(Int(9), Int(2)) == 1);
    CHECK(kronecker(Int(2), Int(2)) == 0);
}

TEST_CASE("kronecker symbol matches Euler's criterion at odd primes") {
    for (long p : {3L, 5L, 7L, 13L, 101L, 163L, 499L}) {
        Int pz(p), e((p - 1) / 2);
        for (long a = 1; a < p; ++a) {
            Int r;
            Int az(a);
            mpz_powm(r.get_mpz_t(), az.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
            int legendre = (r == 1) ? 1 : -1;
            CHECK(kronecker(Int(a), pz) == legendre);
        }
    }
}

TEST_CASE("kronecker symbol is completely multiplicative in both slots") {
    std::mt19937_64 rng(0x5eed0007);
    std::uniform_int_distribution<long> top(-1000000, 1000000);
    std::uniform_int_distribution<long> bot(1, 1000000);
    for (int i = 0; i < 2000; ++i) {
        long a = top(rng), b = top(rng), m = bot(rng), n = bot(rng);
        CHECK(kronecker(Int(a) * Int(b), Int(n)) == kronecker(Int(a), Int(n)) * kronecker(Int(b), Int(n)));
        CHECK(kronecker(Int(a), Int(m) * Int(n)) == kronecker(Int(a), Int(m)) * kronecker(Int(a), Int(n)));
    }
}

TEST_CASE("the character mod 163 re-derives h(-163) = 1 by hand") {
    // Period 163 and mean zero, as a nonprincipal character must have.
    for (long n = 1; n <= 50; ++n)
        CHECK(kronecker(Int(-163), Int(n)) == kronecker(Int(-163), Int(n + 163)));
    long plain = 0;
    Int weighted(0);
    for (long n = 1; n < 163; ++n) {
        int chi = kronecker(Int(-163), Int(n));
        plain += chi;
        weighted += chi * Int(n);
    }
    CHECK(plain == 0);
    // h = -(w/2d) sum chi(n) n with w = 2, so the weighted sum is -163.
    CHECK(weighted == Int(-163));
    CHECK(class_number_sum(Int(163)) == 1);
}

TEST_CASE("class numbers agree with the tables") {
    struct Row { long d, h; };
    const Row rows[] = {{3, 1},  {4, 1},  {7, 1},  {8, 1},  {11, 1}, {15, 2},
                        {19, 1}, {20, 2}, {23, 3}, {24, 2}, {31, 3}, {35, 2},
                        {39, 4}, {40, 2}, {43, 1}, {47, 5}, {51, 2}, {52, 2},
                        {67, 1}, {71, 7}, {84, 4}, {88, 2}, {163, 1}, {164, 8}};
    for (const Row& r : rows) {
        CHECK(class_number_sum(Int(r.d)) == r.h);
        CHECK(class_number_forms(Int(r.d)) == r.h);
    }
}

TEST_CASE("character sum and form count agree on every fundamental -d to 499") {
    long fundamentals = 0;
    for (long d = 3; d <= 499; ++d) {
        if (d % 4 != 0 && d % 4 != 3) continue;
        if (!is_fundamental_neg(Int(d))) continue;
        ++fundamentals;
        CHECK(class_number_sum(Int(d)) == class_number_forms(Int(d)));
    }
    CHECK(fundamentals > 100);
}

TEST_CASE("class number one is exactly the Heegner list") {
    std::vector<long> got;
    for (long d = 3; d <= 200; ++d) {
        if (d % 4 != 0 && d % 4 != 3) continue;
        if (!is_fundamental_neg(Int(d))) continue;
        if (class_number_sum(Int(d)) == 1) got.push_back(d);
    }
    CHECK(got == std::vector<long>{3, 4, 7, 8, 11, 19, 43, 67, 163});
}

TEST_CASE("fundamental discriminant recognition") {
    for (long d : {3L, 4L, 7L, 8L, 11L, 15L, 19L, 20L, 23L, 24L, 40L, 51L, 52L, 163L, 164L})
        CHECK(is_fundamental_neg(Int(d)));
    // Squares, non-squarefree odd parts, and 4m with m ≡ 3 (mod 4).
    for (long d : {9L, 12L, 16L, 25L, 27L, 36L, 48L, 75L, 99L, 100L, 147L, 175L, 180L, 243L})
        CHECK_FALSE(is_fundamental_neg(Int(d)));
}

TEST_CASE("non-fundamental orders fail the integrality cross-check") {
    // The form count is still meaningful for the order itself.
    CHECK(class_number_forms(Int(27)) == 1);
    CHECK(class_number_forms(Int(12)) == 1);
    CHECK(class_number_forms(Int(75)) == 2);
    // The Dirichlet sum is a field-level formula and must refuse quietly
    // wrong answers for these.
    CHECK_THROWS_AS(class_number_sum(Int(27)), consistency_error);
    CHECK_THROWS_AS(class_number_sum(Int(12)), consistency_error);
}

TEST_CASE("discriminant guards") {
    CHECK_THROWS_WITH_AS(class_number_sum(Int(2)), "discriminant parameter needs d >= 3",
                         domain_error);
    CHECK_THROWS_AS(class_number_sum(Int(-7)), domain_error);
    CHECK_THROWS_WITH_AS(class_number_sum(Int(5)),
                         "-d is not a discriminant: need d ≡ 0 or 3 (mod 4)", domain_error);
    CHECK_THROWS_AS(class_number_sum(Int(6)), domain_error);
    CHECK_THROWS_AS(class_number_forms(Int(13)), domain_error);
    CHECK_THROWS_WITH_AS(class_number_sum(Int(100000003)),
                         "discriminant too large for enumeration", range_error);
    CHECK_THROWS_AS(class_number_forms(Int(100000004)), range_error);
    CHECK_FALSE(is_fundamental_neg(Int(0)));
    CHECK_FALSE(is_fundamental_neg(Int(-163)));
}
