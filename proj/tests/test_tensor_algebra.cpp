#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tca/characters.hpp"
#include "tca/dims.hpp"

using namespace tca;

TEST_CASE("sn_act examples") {
    Word w{{1, 2, 3}};
    CHECK(sn_act(perm_identity(3), w) == w);

    Perm swap12{1, 0};                      // (1 2)
    Word xy{{1, 2}};
    CHECK(sn_act(swap12, xy) == Word{{2, 1}});

    Perm cycle{1, 2, 0};                    // 1 -> 2 -> 3 -> 1
    CHECK(sn_act(cycle, w) == Word{{3, 1, 2}});

    CHECK_THROWS_AS(sn_act(swap12, w), std::invalid_argument);
}

TEST_CASE("sn_act is a left action") {
    std::mt19937 rng(42);
    for (int n = 2; n <= 6; ++n) {
        Perm a = perm_identity(n), b = perm_identity(n);
        for (int trial = 0; trial < 50; ++trial) {
            std::shuffle(a.begin(), a.end(), rng);
            std::shuffle(b.begin(), b.end(), rng);
            Word w;
            for (int i = 0; i < n; ++i)
                w.letters.push_back(static_cast<int>(rng() % 3) + 1);
            CHECK(sn_act(perm_compose(a, b), w) == sn_act(a, sn_act(b, w)));
        }
    }
}

TEST_CASE("class sizes sum to n!") {
    for (int n = 1; n <= 10; ++n) {
        Int total = 0, fact;
        mpz_fac_ui(fact.get_mpz_t(), n);
        for (const auto& rho : enumerate_partitions(n)) total += cycle_type_class_size(rho);
        CHECK(total == fact);
    }
    CHECK(cycle_type_class_size(Partition{2, 1}) == 3);
    CHECK(cycle_type_class_size(Partition{3, 1, 1}) == 20);
}

TEST_CASE("character table small values") {
    const auto& t2 = character_table(2);
    CHECK(t2.value(Partition{2}, Partition{1, 1}) == 1);
    CHECK(t2.value(Partition{2}, Partition{2}) == 1);
    CHECK(t2.value(Partition{1, 1}, Partition{1, 1}) == 1);
    CHECK(t2.value(Partition{1, 1}, Partition{2}) == -1);

    const auto& t5 = character_table(5);
    // trivial and sign rows
    for (const auto& rho : t5.shapes()) {
        CHECK(t5.value(Partition{5}, rho) == 1);
        int sign = (5 - rho.rows()) % 2 == 0 ? 1 : -1;
        CHECK(t5.value(Partition{1, 1, 1, 1, 1}, rho) == sign);
        // degree column
        CHECK(Int(static_cast<long>(t5.value(rho, Partition{1, 1, 1, 1, 1}))) == specht_dim(rho));
    }
    // a classical value: chi^{(3,2)} at (2,2,1) is 1... frozen from MN by hand below
    CHECK(t5.value(Partition{3, 2}, Partition{5}) == 0);
    CHECK(t5.value(Partition{4, 1}, Partition{5}) == -1);
}

TEST_CASE("row orthogonality under the class-weighted inner product") {
    for (int n = 1; n <= 8; ++n) {
        const auto& table = character_table(n);
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), n);
        const auto& shapes = table.shapes();
        for (size_t a = 0; a < shapes.size(); ++a)
            for (size_t b = a; b < shapes.size(); ++b) {
                Int acc = 0;
                for (size_t c = 0; c < shapes.size(); ++c)
                    acc += cycle_type_class_size(shapes[c]) *
                           Int(static_cast<long>(table.value_at(a, c))) *
                           Int(static_cast<long>(table.value_at(b, c)));
                CHECK(acc == (a == b ? fact : Int(0)));
            }
    }
}

TEST_CASE("tensor_power_character") {
    auto chi = tensor_power_character(2, 3);
    CHECK(chi.values.at(Partition{1, 1, 1}) == 8);
    CHECK(chi.values.at(Partition{3}) == 2);
    CHECK(chi.values.at(Partition{2, 1}) == 4);
}

TEST_CASE("schur_weyl_decompose examples") {
    auto d22 = schur_weyl_decompose(2, 2);
    CHECK(d22.at(Partition{2}) == 3);
    CHECK(d22.at(Partition{1, 1}) == 1);

    for (int n = 1; n <= 5; ++n) {
        auto d = schur_weyl_decompose(1, n);
        for (const auto& [lambda, mult] : d)
            CHECK(mult == (lambda == Partition{n} ? 1 : 0));
    }

    auto d24 = schur_weyl_decompose(2, 4);
    CHECK(d24.at(Partition{1, 1, 1, 1}) == 0);  // vanishing: more rows than rank
}

TEST_CASE("Schur-Weyl multiplicities equal hook-content dimensions") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 6; ++n) {
            auto decomposition = schur_weyl_decompose(m, n);
            Int total = 0, expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), m, n);
            for (const auto& [lambda, mult] : decomposition) {
                CHECK(mult == schur_dim(lambda, m));
                total += mult * specht_dim(lambda);
            }
            CHECK(total == expected);
        }
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(character_table(11), std::invalid_argument);
    CHECK_THROWS_AS(tensor_power_character(2, 11), std::invalid_argument);
    CHECK_THROWS_AS(schur_weyl_decompose(2, 9), std::invalid_argument);
}
