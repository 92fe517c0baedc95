#include <doctest.h>

#include <algorithm>
#include <numeric>

#include <ttplon/generator.hpp>

#include "toy_instances.hpp"

using namespace ttplon;

TEST_CASE("capacity classes") {
    const std::vector<double> w{10, 20, 30, 50};
    CHECK(compute_capacity(w, 2) == 20.0);
    CHECK(compute_capacity(w, 10) == doctest::Approx(100.0).epsilon(1e-15));
    CHECK_THROWS_AS(compute_capacity(w, 11), DomainError);
    CHECK_THROWS_AS(compute_capacity(w, 11, true), DomainError);
    CHECK_THROWS_AS(compute_capacity(w, 4), DomainError);
    CHECK(compute_capacity(w, 4, true) == doctest::Approx(40.0));
    CHECK_THROWS_AS(compute_capacity(std::vector<double>{}, 2), DomainError);
}

TEST_CASE("item correlation classes") {
    std::mt19937_64 rng(3);
    SUBCASE("bsc profit is weight plus 100") {
        auto [p, w] = generate_items(Correlation::BSC, 50, rng);
        for (std::size_t k = 0; k < p.size(); ++k) {
            CHECK(p[k] - w[k] == 100.0);
            CHECK(w[k] >= 1.0);
            CHECK(w[k] <= 1000.0);
        }
    }
    SUBCASE("usw weights are similar") {
        auto [p, w] = generate_items(Correlation::USW, 50, rng);
        const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
        CHECK(*hi - *lo <= 10.0);
        CHECK(*lo >= 1000.0);
        CHECK(*std::max_element(p.begin(), p.end()) <= 1000.0);
    }
    SUBCASE("u is reproducible from the seed") {
        std::mt19937_64 a(99);
        std::mt19937_64 b(99);
        CHECK(generate_items(Correlation::U, 6, a) == generate_items(Correlation::U, 6, b));
    }
}

TEST_CASE("renting rate of the rectangle toy matches the brute-force oracle") {
    // Frozen from tests/oracles/compute_oracles.py (double brute force over
    // 6 tours x 8 plans).
    const Instance inst = ttplon::testing::toy_rectangle();
    CHECK(compute_renting_rate(inst, Model::TTP0) == doctest::Approx(5.714285714285714).epsilon(1e-13));
    CHECK(compute_renting_rate(inst, Model::TTPB) == doctest::Approx(5.714285714285714).epsilon(1e-13));
    CHECK(compute_renting_rate(inst, Model::TTPA) == doctest::Approx(2.8535794462459467).epsilon(1e-13));
    CHECK(compute_renting_rate(inst, Model::TTPC) == doctest::Approx(2.8535794462459467).epsilon(1e-13));
}

TEST_CASE("renting rate is model independent at constant speed") {
    Instance inst = ttplon::testing::toy_rectangle();
    inst.v_min = inst.v_max;
    const double r = compute_renting_rate(inst, Model::TTP0);
    for (Model m : kAllModels) {
        CHECK(compute_renting_rate(inst, m) == r);
    }
}

TEST_CASE("renting rate errors") {
    Instance inst = ttplon::testing::toy_rectangle();
    inst.profits = {5};
    inst.weights = {50};
    inst.item_city = {2};
    CHECK_THROWS_AS(compute_renting_rate(inst, Model::TTPA), DegenerateInstanceError);

    Instance big;
    big.coords.resize(12);
    big.dist = ceil2d_distances(big.coords);
    big.profits.assign(6, 1.0);
    big.weights.assign(6, 1.0);
    big.item_city.assign(6, 1);
    big.capacity = 3;
    CHECK_THROWS_AS(compute_renting_rate(big, Model::TTP0), SizeGuardError);
}

TEST_CASE("generated standard instances") {
    for (Correlation corr : kAllCorrelations) {
        for (int cap : kStandardCapacityClasses) {
            GeneratorConfig cfg;
            cfg.correlation = corr;
            cfg.capacity_class = cap;
            cfg.seed = 1234;
            const Instance inst = generate_instance(cfg);
            CHECK(inst.item_city == std::vector<int>{1, 2, 3, 4, 5, 6});
            const double total = inst.total_weight();
            CHECK(inst.capacity < total);
            CHECK(inst.capacity >= 2.0 / 11.0 * total * (1 - 1e-15));
            CHECK(inst.renting_rate > 0.0);
            CHECK(inst.v_max == 1.0);
            CHECK(inst.v_min == 0.1);
            CHECK(generate_instance(cfg) == inst);
        }
    }
}

TEST_CASE("shared coordinates give equal distance matrices") {
    std::mt19937_64 rng(17);
    const auto coords = generate_coords(7, 100.0, rng);
    std::vector<double> first;
    for (int i = 0; i < 100; ++i) {
        GeneratorConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(i);
        cfg.shared_coords = coords;
        const Instance inst = generate_instance(cfg);
        if (i == 0) {
            first = inst.dist;
        }
        CHECK(inst.dist == first);
    }
}

TEST_CASE("non-standard configs need the acknowledgment flag") {
    GeneratorConfig cfg;
    cfg.n_cities = 5;
    cfg.n_items = 4;
    CHECK_THROWS_AS(generate_instance(cfg), DomainError);
    cfg.allow_non_standard = true;
    CHECK_NOTHROW(generate_instance(cfg));
    CHECK_FALSE(is_standard_config(cfg));
}

TEST_CASE("degenerate draws are regenerated with the next seed") {
    // One light item per city would always fit; a single heavy item with a
    // tiny class never does, so every attempt is degenerate.
    GeneratorConfig cfg;
    cfg.n_cities = 3;
    cfg.n_items = 1;
    cfg.capacity_class = 1;
    cfg.allow_non_standard = true;
    CHECK_THROWS_AS(generate_with_retry(cfg, 5), DegenerateInstanceError);

    cfg.capacity_class = 2;
    cfg.n_items = 6;
    const GeneratedInstance g = generate_with_retry(cfg, 5);
    CHECK(g.attempts == 1);
    CHECK(g.seed == cfg.seed);
}

TEST_CASE("search space size and guard") {
    CHECK(search_space_size(7, 6) == 46080);
    CHECK(search_space_size(4, 3) == 48);
    CHECK_NOTHROW(check_enumeration_guard(7, 6));
    CHECK_THROWS_AS(check_enumeration_guard(12, 6), SizeGuardError);
}
