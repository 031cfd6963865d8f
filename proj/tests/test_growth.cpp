#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tca/characters.hpp"
#include "tca/growth.hpp"

using namespace tca;

TEST_CASE("gk_free_tca characteristic zero values") {
    // m = 1: only shapes (k), each of schur dimension 1, so f(N) = N + 1
    auto t1 = gk_free_tca(1, FieldSpec::rational(), 12);
    for (int n = 0; n <= 12; ++n) CHECK(t1.values[n] == n + 1);
    CHECK_FALSE(t1.lower_bound_only);

    // m = 2: f(0)=1, f(1)=3, f(2) = 1 + 2 + (3 + 1) = 7
    auto t2 = gk_free_tca(2, FieldSpec::rational(), 6);
    CHECK(t2.values[0] == 1);
    CHECK(t2.values[1] == 3);
    CHECK(t2.values[2] == 7);

    // increments are the full dimension of degree n: sum of schur_dim
    // over |lambda| = n equals the multiplicity-weighted word count
    for (int n = 1; n <= 6; ++n) {
        Int inc = t2.values[n] - t2.values[n - 1];
        Int direct = 0;
        for (const auto& lambda : enumerate_partitions(n, 2))
            direct += schur_dim(lambda, 2);
        CHECK(inc == direct);
    }
}

TEST_CASE("gk_free_tca increments match the Schur-Weyl multiplicities") {
    for (int m = 2; m <= 3; ++m) {
        auto table = gk_free_tca(m, FieldSpec::rational(), 7);
        for (int n = 1; n <= 7; ++n) {
            Int total = 0;
            for (const auto& [lambda, mult] : schur_weyl_decompose(m, n)) total += mult;
            CHECK(table.values[n] - table.values[n - 1] == total);
        }
    }
}

TEST_CASE("gk_free_tca characteristic p") {
    // m <= 2 accepted; shapes (a,b) with a != b fall back to length 1
    auto table = gk_free_tca(2, FieldSpec::prime(2), 8);
    CHECK(table.characteristic == 2);
    CHECK(table.lower_bound_only);
    auto char0 = gk_free_tca(2, FieldSpec::rational(), 8);
    for (int n = 0; n <= 8; ++n) CHECK(table.values[n] >= char0.values[n]);

    CHECK_THROWS_AS(gk_free_tca(3, FieldSpec::prime(2), 4), std::invalid_argument);
}

TEST_CASE("gk_sym_triv2 is the partial sum of the partition numbers") {
    auto table = gk_sym_triv2(20);
    CHECK(table.values[0] == 1);
    CHECK(table.values[1] == 2);
    CHECK(table.values[5] == 1 + 1 + 2 + 3 + 5 + 7);
    auto counts = partition_counts(20);
    Int run = 0;
    for (int n = 0; n <= 20; ++n) {
        run += counts[n];
        CHECK(table.values[n] == run);
    }
    CHECK_FALSE(table.lower_bound_only);
    CHECK(gk_sym_triv2(20, FieldSpec::prime(3)).lower_bound_only);
}

TEST_CASE("gk_sl2_invariants") {
    // char 0: one fundamental invariant per even degree, f(N) = 1 + floor(N/2)
    auto t0 = gk_sl2_invariants(FieldSpec::rational(), 10);
    CHECK(t0.values[10] == 6);
    for (int n = 0; n <= 10; ++n) CHECK(t0.values[n] == 1 + n / 2);

    // char p: the two-row estimate kicks in once 2p^e fits under m+1
    auto tp = gk_sl2_invariants(FieldSpec::prime(2), 40);
    for (int n = 1; n <= 40; ++n) CHECK(tp.values[n] >= tp.values[n - 1]);
    CHECK(tp.values[40] > t0.values[10]);
    // the degree-2m piece contributes two_row_length_estimate(m, 2), floored at 1
    Int expect = 1;
    for (int m = 1; 2 * m <= 40; ++m)
        expect += std::max(1, two_row_length_estimate(m, 2));
    CHECK(tp.values[40] == expect);
}

TEST_CASE("estimate_slope recovers exact power laws") {
    GrowthTable lin{"test", 0, {}, false, ""};
    for (int n = 0; n <= 100; ++n) lin.values.push_back(n);
    auto est = estimate_slope(lin, 10, 100);
    CHECK(std::abs(est.slope - 1.0) < 1e-12);
    CHECK(est.residual < 1e-12);

    GrowthTable cubic{"test", 0, {}, false, ""};
    for (long n = 0; n <= 100; ++n) cubic.values.push_back(Int(n) * n * n);
    auto est3 = estimate_slope(cubic, 10, 100);
    CHECK(std::abs(est3.slope - 3.0) < 1e-9);
}

TEST_CASE("estimate_slope window validation") {
    auto table = gk_sym_triv2(10);
    CHECK_THROWS_AS(estimate_slope(table, 5, 5), std::invalid_argument);
    CHECK_THROWS_AS(estimate_slope(table, 2, 20), std::invalid_argument);
    CHECK_THROWS_AS(estimate_slope(table, 0, 5), std::invalid_argument);
}

TEST_CASE("free tca growth exponent matches the closed form") {
    // GK dimension of the rank-m family is m(m+1)/2, read off the slope
    auto t2 = gk_free_tca(2, FieldSpec::rational(), 400);
    CHECK(std::abs(estimate_slope(t2, 200, 400).slope - 3.0) < 0.1);
    auto t3 = gk_free_tca(3, FieldSpec::rational(), 200);
    CHECK(std::abs(estimate_slope(t3, 100, 200).slope - 6.0) < 0.35);
}

TEST_CASE("slope is robust under rescaling the grading") {
    // reading every second entry doubles nothing: same exponent
    auto table = gk_free_tca(2, FieldSpec::rational(), 800);
    GrowthTable halved{"test", 0, {}, false, ""};
    for (int n = 0; 2 * n <= 800; ++n) halved.values.push_back(table.values[2 * n]);
    auto a = estimate_slope(table, 200, 400);
    auto b = estimate_slope(halved, 100, 200);
    CHECK(std::abs(a.slope - b.slope) < 0.1);
}

TEST_CASE("tables are weakly increasing and start at 1") {
    for (const auto& table :
         {gk_free_tca(2, FieldSpec::rational(), 30), gk_sym_triv2(30),
          gk_sl2_invariants(FieldSpec::rational(), 30),
          gk_sl2_invariants(FieldSpec::prime(3), 30)}) {
        CHECK(table.values[0] == 1);
        for (int n = 1; n <= 30; ++n) CHECK(table.values[n] >= table.values[n - 1]);
    }
}
