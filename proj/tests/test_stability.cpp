#include <catch_amalgamated.hpp>

#include <random>

#include "aguiar/stability.hpp"

using namespace aguiar;

namespace {

struct DegreeLimitGuard {
    int saved = degree_limit();
    explicit DegreeLimitGuard(int n) { set_degree_limit(n); }
    ~DegreeLimitGuard() { set_degree_limit(saved); }
};

const Partition lam_a{7, 3}, mu_a{5, 4, 2}, nu_a{6, 6, 5, 4};
const Partition lam_b{3, 3, 3}, mu_b{4, 3, 2, 1}, nu_b{5, 4, 1};

} // namespace

TEST_CASE("minimal admissible contexts", "[stability]") {
    CHECK(minimal_context(lam_a, mu_a, nu_a, murnaghan_triple) == BoundContext{2, 3});
    CHECK(minimal_context(lam_b, mu_b, nu_b, murnaghan_triple) == BoundContext{3, 4});
    CHECK(minimal_context({}, {}, {}, murnaghan_triple) == BoundContext{2, 2});
    // ℓ(ν) = 10 forces growth past (2,2); n1 grows first on ties
    CHECK(minimal_context({1}, {1}, Partition(std::vector<int>(10, 1)), murnaghan_triple) ==
          BoundContext{3, 2});
    CHECK(admissible({2, 3}, lam_a, mu_a, nu_a, murnaghan_triple));
    CHECK_FALSE(admissible({2, 2}, lam_a, mu_a, nu_a, murnaghan_triple));
}

TEST_CASE("ying coefficient bound", "[stability]") {
    CHECK(ying_coefficient_bound(lam_a, mu_a, nu_a) == 18);
    CHECK(ying_coefficient_bound(lam_b, mu_b, nu_b) == 4);
    CHECK(ying_coefficient_bound({}, {}, {}) == 0);
}

TEST_CASE("ying module bound", "[stability]") {
    CHECK(ying_module_bound({1}, {1}, 2) == 2);
    CHECK(ying_module_bound({1}, {1}, 1) == 0);
    // 6 - 2 - 1 - 2 - 1 + 0 + 0
    CHECK(ying_module_bound({2}, {1}, 2) == 0);
    CHECK(ying_module_bound({2}, {1}, 3) == 3);
}

TEST_CASE("murnaghan bounds", "[stability]") {
    CHECK(murnaghan_bound(lam_a, mu_a, nu_a, {2, 3}) == 15);
    CHECK(murnaghan_bound(lam_b, mu_b, nu_b, {3, 4}) == 7);
    for (int n1 = 2; n1 <= 4; ++n1)
        for (int n2 = 2; n2 <= 4; ++n2)
            CHECK(murnaghan_bound({1}, {1}, {1}, {n1, n2}) == 0);

    CHECK(murnaghan_bound_improved(lam_a, mu_a, nu_a, {2, 3}) == 17);
    CHECK(murnaghan_bound_improved({}, {}, {}, {2, 2}) == 0);
    CHECK(murnaghan_improved_raw({1}, {1}, {1, 1}, {2, 2}) == 2);
    CHECK(murnaghan_bound_improved({1}, {1}, {1, 1}, {2, 2}) == 1);
}

TEST_CASE("bounds in the ((2),(1);·) directions", "[stability]") {
    CHECK(t22_bound({}, {}, {}, {2, 2}) == 0);
    CHECK(t22_bound({2}, {1}, {2}, {2, 2}) == 0);
    CHECK(t23_bound({}, {}, {}, {2, 2}) == 0);
    CHECK(t23_bound({2}, {1}, {3}, {2, 2}) == 0);
    CHECK(t23_orbit3_term({2}, {1}, {3}, {2, 2}) == -1);
}

TEST_CASE("inadmissible contexts are rejected", "[stability]") {
    CHECK_THROWS_AS(murnaghan_bound({1}, {1}, {1}, {1, 2}), DomainError);
    CHECK_THROWS_AS(murnaghan_bound(lam_a, mu_a, nu_a, {2, 2}), DomainError);
    CHECK_THROWS_AS(murnaghan_bound_improved({1, 1, 1}, {1}, {1}, {2, 2}), DomainError);
    CHECK_THROWS_AS(t22_bound({1}, {1}, {1}, {2, 1}), DomainError);
    CHECK_THROWS_AS(t23_bound({1}, {1, 1, 1}, {1}, {2, 2}), DomainError);
}

TEST_CASE("bound names and dispatch", "[stability]") {
    for (BoundKind k : {BoundKind::ying, BoundKind::murnaghan, BoundKind::murnaghan_improved,
                        BoundKind::t22, BoundKind::t23})
        CHECK(parse_bound_kind(bound_name(k)) == k);
    CHECK_FALSE(parse_bound_kind("nope").has_value());
    CHECK(evaluate_bound(BoundKind::murnaghan, lam_a, mu_a, nu_a) == 15);
    CHECK(evaluate_bound(BoundKind::murnaghan_improved, lam_a, mu_a, nu_a) == 17);
    CHECK(evaluate_bound(BoundKind::ying, lam_b, mu_b, nu_b) == 4);
    CHECK(evaluate_bound(BoundKind::murnaghan, lam_b, mu_b, nu_b) == 7);
    CHECK(applicable_bounds(triple_2_1_2) == std::vector<BoundKind>{BoundKind::t22});
    CHECK(applicable_bounds(Triple{{2}, {1}, {2, 1}}).empty());
}

TEST_CASE("bounds are clamped and grow with the context", "[stability]") {
    std::mt19937 rng(2024);
    auto pick = [&](int max_weight) {
        const auto &list = all_partitions(std::uniform_int_distribution<int>(0, max_weight)(rng));
        return list[std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(rng)];
    };
    for (int trial = 0; trial < 400; ++trial) {
        const Partition lambda = pick(8), mu = pick(8), nu = pick(14);
        for (BoundKind k : {BoundKind::ying, BoundKind::murnaghan, BoundKind::murnaghan_improved,
                            BoundKind::t22, BoundKind::t23})
            CHECK(evaluate_bound(k, lambda, mu, nu) >= 0);

        const BoundContext base = minimal_context(lambda, mu, nu, murnaghan_triple);
        const long at_base = murnaghan_bound(lambda, mu, nu, base);
        CHECK(murnaghan_bound(lambda, mu, nu, {base.n1 + 1, base.n2}) >= at_base);
        CHECK(murnaghan_bound(lambda, mu, nu, {base.n1, base.n2 + 1}) >= at_base);
    }
}

TEST_CASE("stable-triple hypothesis", "[stability]") {
    CHECK(check_stable_hypothesis(murnaghan_triple, 6).holds);
    CHECK(check_stable_hypothesis(triple_2_1_2, 5).holds);

    const HypothesisCheck bad = check_stable_hypothesis(Triple{{1}, {1}, {3}}, 1);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.failing_d.has_value());
    CHECK(*bad.failing_d == 1);
    CHECK(bad.failing_value == 0);

    CHECK_THROWS_AS(check_stable_hypothesis(murnaghan_triple, 0), DomainError);
}

TEST_CASE("scan examples", "[stability]") {
    const StabilityReport ones = scan_sequence({1}, {1}, {1}, murnaghan_triple, 5);
    CHECK(ones.values == std::vector<Int>(6, 1));
    CHECK(ones.empirical_onset == 0);
    CHECK_FALSE(ones.inconclusive);

    const StabilityReport r = scan_sequence({1}, {1}, {1, 1}, murnaghan_triple, 5);
    CHECK(r.values.size() == 6);
    CHECK_FALSE(r.inconclusive);
    CHECK(r.empirical_onset <= r.bound_predictions.at("murnaghan"));
    CHECK(r.bound_predictions.count("ying") == 1);
    CHECK(r.bound_predictions.count("murnaghan-improved") == 1);

    const StabilityReport h = scan_sequence({}, {}, {}, Triple{{2}, {1}, {1, 1}}, 4);
    CHECK(h.values == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(h.bound_predictions.empty());

    CHECK_THROWS_AS(scan_sequence({}, {}, {}, murnaghan_triple, -1), DomainError);
    CHECK_THROWS_AS(scan_sequence({1}, {1}, {1}, murnaghan_triple, 14), LimitExceeded);
}

TEST_CASE("constant tail detection", "[stability]") {
    CHECK(constant_tail_start({}) == 0);
    CHECK(constant_tail_start({4}) == 0);
    CHECK(constant_tail_start({0, 1, 2, 2, 2}) == 2);
    CHECK(constant_tail_start({1, 1, 0}) == 2);
}

TEST_CASE("scanner agrees with the ((2),(1);·) bounds", "[stability]") {
    DegreeLimitGuard guard(20);

    const StabilityReport t22 = scan_sequence({1}, {1}, {2}, triple_2_1_2, 6);
    CHECK_FALSE(t22.inconclusive);
    CHECK(t22.empirical_onset <= t22.bound_predictions.at("t22"));

    const StabilityReport t23 = scan_sequence({2}, {1}, {3}, triple_2_1_3, 5);
    CHECK_FALSE(t23.inconclusive);
    CHECK(t23.empirical_onset <= t23.bound_predictions.at("t23"));
}

TEST_CASE("module-level onset equals the ying module bound", "[stability]") {
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= 2; ++l)
            for (const Partition &lambda : all_partitions(k))
                for (const Partition &mu : all_partitions(l))
                    for (int i = std::max(k, l); i <= k + l; ++i) {
                        const long bound = ying_module_bound(lambda, mu, i);
                        const int dmax = static_cast<int>(bound) + 3;
                        if (k + l - i + dmax > 9)
                            continue;
                        INFO(to_string(lambda) << " " << to_string(mu) << " i=" << i);
                        CHECK(module_tail_start(lambda, mu, i, dmax) == bound);
                    }
}
