#include <catch_amalgamated.hpp>

#include <algorithm>

#include "aguiar/characters.hpp"
#include "oracles.hpp"

using namespace aguiar;

TEST_CASE("character value examples", "[characters]") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition &rho : all_partitions(n))
            CHECK(character_value(Partition{n}, rho) == 1);
    CHECK(character_value({1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(character_value({2, 1}, Partition{3}) == -1);
    CHECK(character_value({2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(character_value({}, Partition{}) == 1);
}

TEST_CASE("character value rejects mismatched weights", "[characters]") {
    CHECK_THROWS_AS(character_value({2, 1}, Partition{2}), DomainError);
}

TEST_CASE("degree limit", "[characters]") {
    CHECK(degree_limit() == default_degree_limit);
    CHECK_THROWS_AS(character_table(default_degree_limit + 1), LimitExceeded);
    CHECK_THROWS_AS(character_value(Partition{15}, Partition{15}), LimitExceeded);
}

TEST_CASE("Murnaghan–Nakayama agrees with the permutation-module table", "[characters][oracle]") {
    for (int n = 0; n <= 6; ++n) {
        const auto expected = oracle::character_table(n);
        const auto &shapes = all_partitions(n);
        for (std::size_t a = 0; a < shapes.size(); ++a)
            for (std::size_t j = 0; j < shapes.size(); ++j) {
                INFO("n=" << n << " λ=" << to_string(shapes[a]) << " ρ=" << to_string(shapes[j]));
                CHECK(character_value(shapes[a], shapes[j]) == expected[a][j]);
            }
    }
}

TEST_CASE("small tables", "[characters]") {
    const CharacterTable &t0 = character_table(0);
    REQUIRE(t0.size() == 1);
    CHECK(t0.value(Partition{}, CycleType(Partition{})) == 1);

    const CharacterTable &t3 = character_table(3);
    REQUIRE(t3.size() == 3);
    CHECK(t3.dimension({3}) == 1);
    CHECK(t3.dimension({2, 1}) == 2);
    CHECK(t3.dimension({1, 1, 1}) == 1);

    const CharacterTable &t5 = character_table(5);
    CHECK(t5.size() == 7);
    Wide total = 0;
    for (const Partition &lambda : all_partitions(5))
        total += Wide{t5.dimension(lambda)} * t5.dimension(lambda);
    CHECK(total == 120);
}

TEST_CASE("orthogonality, dimensions and sign row", "[characters]") {
    for (int n = 0; n <= 10; ++n) {
        const CharacterTable &t = character_table(n);
        const auto &shapes = all_partitions(n);
        const Partition ones = shapes.back();

        // row relation
        for (std::size_t a = 0; a < shapes.size(); ++a)
            for (std::size_t b = a; b < shapes.size(); ++b)
                CHECK(inner_product(t.rows()[a], t.rows()[b]) == (a == b ? 1 : 0));

        // column relation: Σ_λ χ^λ(ρ)χ^λ(σ) = z_ρ δ_{ρσ}
        for (std::size_t j = 0; j < shapes.size(); ++j)
            for (std::size_t k = j; k < shapes.size(); ++k) {
                Wide s = 0;
                for (std::size_t a = 0; a < shapes.size(); ++a)
                    s += Wide{t.rows()[a].values[j]} * t.rows()[a].values[k];
                CHECK(s == (j == k ? CycleType(shapes[j]).centralizer_order() : 0));
            }

        Wide dims = 0;
        for (const Partition &lambda : shapes) {
            const Int d = t.dimension(lambda);
            CHECK(d > 0);
            CHECK(d == oracle::hook_length_dimension(lambda));
            dims += Wide{d} * d;
        }
        CHECK(dims == factorial(n));

        for (const Partition &rho : shapes)
            CHECK(t.value(ones, CycleType(rho)) == CycleType(rho).sign());
    }
}

TEST_CASE("inner product examples", "[characters]") {
    CHECK(inner_product(character({2, 1}), character({2, 1})) == 1);
    CHECK(inner_product(character({3}), character({1, 1, 1})) == 0);
    CHECK(inner_product(character({2}) + character({1, 1}), character({2})) == 1);

    // the regular character contains each irreducible dim-many times
    ClassFunction regular(4);
    for (const Partition &lambda : all_partitions(4)) {
        ClassFunction f = character(lambda);
        for (Int m = character_table(4).dimension(lambda); m > 0; --m)
            regular += f;
    }
    for (const Partition &lambda : all_partitions(4))
        CHECK(inner_product(regular, character(lambda)) == character_table(4).dimension(lambda));

    CHECK_THROWS_AS(inner_product(character({2}), character({3})), DomainError);
}

TEST_CASE("installed tables are served from the cache", "[characters]") {
    const CharacterTable copy = character_table(6);
    install_character_table(copy);
    CHECK(character_table(6) == copy);
    const auto built = built_table_degrees();
    CHECK(std::find(built.begin(), built.end(), 6) != built.end());
}
