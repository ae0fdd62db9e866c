#include <catch_amalgamated.hpp>

#include "aguiar/kronecker.hpp"

using namespace aguiar;

TEST_CASE("Kronecker coefficient examples", "[kronecker]") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition &mu : all_partitions(n))
            for (const Partition &nu : all_partitions(n))
                CHECK(kronecker_coefficient(Partition{n}, mu, nu) == (mu == nu ? 1 : 0));
    CHECK(kronecker_coefficient({1, 1}, {1, 1}, {2}) == 1);
    CHECK(kronecker_coefficient({2, 1}, {2, 1}, {2, 1}) == 1);
    CHECK(kronecker_coefficient({2, 1}, {2, 1}, {3}) == 1);
    CHECK(kronecker_coefficient({2}, {2}, {3}) == 0);
    CHECK(kronecker_coefficient({}, {}, {}) == 1);
}

TEST_CASE("kronecker_expand_pair examples", "[kronecker]") {
    CHECK(kronecker_expand_pair({2}, {2}) == Expansion{{{2}, 1}});
    CHECK(kronecker_expand_pair({1, 1}, {2}) == Expansion{{{1, 1}, 1}});
    CHECK(kronecker_expand_pair({2, 1}, {2, 1}) ==
          Expansion{{{3}, 1}, {{2, 1}, 1}, {{1, 1, 1}, 1}});
    CHECK_THROWS_AS(kronecker_expand_pair({2}, {1}), DomainError);
}

TEST_CASE("Kronecker coefficients are symmetric in all three arguments", "[kronecker]") {
    for (int n = 0; n <= 6; ++n) {
        const auto &shapes = all_partitions(n);
        for (const Partition &a : shapes)
            for (const Partition &b : shapes)
                for (const Partition &c : shapes) {
                    const Int g = kronecker_coefficient(a, b, c);
                    CHECK(g >= 0);
                    CHECK(g == kronecker_coefficient(b, a, c));
                    CHECK(g == kronecker_coefficient(a, c, b));
                    CHECK(g == kronecker_coefficient(c, b, a));
                    // tensoring two factors with the sign representation
                    CHECK(g == kronecker_coefficient(a.conjugate(), b.conjugate(), c));
                }
    }
}

TEST_CASE("one-row triples", "[kronecker]") {
    for (int n = 1; n <= 8; ++n)
        CHECK(kronecker_coefficient(Partition{n}, Partition{n}, Partition{n}) == 1);
}

TEST_CASE("tensor products decompose with matching dimensions", "[kronecker]") {
    for (int n = 0; n <= 6; ++n) {
        const CharacterTable &t = character_table(n);
        for (const Partition &a : all_partitions(n))
            for (const Partition &b : all_partitions(n)) {
                Int dims = 0;
                for (const auto &[nu, g] : kronecker_expand_pair(a, b))
                    dims += g * t.dimension(nu);
                CHECK(dims == t.dimension(a) * t.dimension(b));
            }
    }
}
