#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <random>

#include <ttplon/errors.hpp>
#include <ttplon/stats.hpp>

using namespace ttplon;

TEST_CASE("spearman") {
    const std::vector<double> up{1, 2, 3, 4, 5};
    const std::vector<double> down{9, 7, 5, 3, 1};
    CHECK(spearman(up, up).rho == 1.0);
    CHECK(spearman(up, down).rho == -1.0);
    CHECK(spearman(std::vector<double>{1, 2, 2, 4}, std::vector<double>{10, 20, 20, 40}).rho == 1.0);

    const auto flat = spearman(up, std::vector<double>{3, 3, 3, 3, 3});
    CHECK(flat.degenerate);
    CHECK(flat.rho == 0.0);

    CHECK_THROWS_AS(spearman(std::vector<double>{1}, std::vector<double>{1}), DomainError);
    CHECK_THROWS_AS(spearman(up, std::vector<double>{1, 2}), DomainError);
}

TEST_CASE("average ranks") {
    CHECK(average_ranks(std::vector<double>{30, 10, 20, 10}) == std::vector<double>{4, 1.5, 3, 1.5});
}

TEST_CASE("spearman is invariant under increasing transforms") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x(20);
        std::vector<double> y(20);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = std::round(u(rng) * 2) / 2; // ties
            y[i] = x[i] + u(rng);
        }
        std::vector<double> tx(x.size());
        std::vector<double> ty(y.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            tx[i] = std::exp(x[i]);
            ty[i] = 3 * y[i] * y[i] * y[i] + 1;
        }
        const auto a = spearman(x, y);
        const auto b = spearman(tx, ty);
        CHECK(a.rho == doctest::Approx(b.rho).epsilon(1e-12));
        CHECK(a.rho >= -1.0);
        CHECK(a.rho <= 1.0);
    }
}

TEST_CASE("fisher mean") {
    CHECK(fisher_mean(std::vector<double>{0.5, 0.5, 0.5}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(fisher_mean(std::vector<double>{0.3, -0.3}) == 0.0);
    // 50-digit reference from tests/oracles/compute_oracles.py.
    CHECK(std::abs(fisher_mean(std::vector<double>{0.2, 0.8}) - 0.572122461732037256432651822071) <= 1e-12);
    CHECK(fisher_mean(std::vector<double>{1.0, 1.0}) == doctest::Approx(kFisherClamp).epsilon(1e-12));
    CHECK(std::isfinite(fisher_mean(std::vector<double>{-1.0, 1.0, 1.0})));
    CHECK_THROWS_AS(fisher_mean(std::vector<double>{}), DomainError);
}

TEST_CASE("fisher mean is symmetric and bounded") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> r(1 + rng() % 8);
        for (double& v : r) {
            v = u(rng);
        }
        const double m = fisher_mean(r);
        CHECK(m > -1.0);
        CHECK(m < 1.0);
        std::shuffle(r.begin(), r.end(), rng);
        CHECK(fisher_mean(r) == doctest::Approx(m).epsilon(1e-14));
    }
}

TEST_CASE("class aggregation") {
    const ClassKey key{Model::TTPB, Correlation::U, 5, 0.9};
    CHECK(class_label(key) == "ttpb_u_c5_d0.9");
    CHECK(class_label({Model::TTPA, Correlation::BSC, 10, std::nullopt}) == "ttpa_bsc_c10");

    auto record = [](double nv, double rho, bool degenerate = false) {
        InstanceStats s;
        s.metrics.n_v = static_cast<std::uint64_t>(nv);
        s.metrics.n_e = 2 * s.metrics.n_v;
        s.metrics.clustering = nv / 10;
        s.metrics.path_length = nv;
        s.metrics.path_length_defined = true;
        s.metrics.mean_basin = 100 / nv;
        s.rho = {rho, degenerate};
        return s;
    };

    SUBCASE("single record") {
        const std::vector<InstanceStats> one{record(4, 0.5)};
        const ClassSummary s = aggregate_class(key, one);
        CHECK(s.count == 1);
        CHECK_FALSE(s.std_defined);
        CHECK(s.n_v.mean == 4.0);
        CHECK(s.n_v.std == 0.0);
        CHECK(s.mean_basin.mean == 25.0);
        CHECK(s.rho_fisher == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("two identical records") {
        const std::vector<InstanceStats> two{record(4, 0.5), record(4, 0.5)};
        const ClassSummary s = aggregate_class(key, two);
        CHECK(s.std_defined);
        CHECK(s.n_v.std == 0.0);
        CHECK(s.clustering.std == 0.0);
    }
    SUBCASE("known triple") {
        const std::vector<InstanceStats> three{record(1, 0.2), record(2, 0.8), record(3, 0.1, true)};
        const ClassSummary s = aggregate_class(key, three);
        CHECK(s.n_v.mean == 2.0);
        CHECK(s.n_v.std == 1.0);
        CHECK(s.path_length.mean == 2.0);
        CHECK(s.rho_degenerate == 1);
        CHECK(s.rho_fisher == doctest::Approx(fisher_mean(std::vector<double>{0.2, 0.8})).epsilon(1e-15));
    }
    SUBCASE("undefined path lengths are excluded") {
        std::vector<InstanceStats> recs{record(2, 0.5), record(6, 0.5)};
        recs[1].metrics.path_length_defined = false;
        recs[1].metrics.path_length = 0.0;
        const ClassSummary s = aggregate_class(key, recs);
        CHECK(s.path_length.count == 1);
        CHECK(s.path_length.mean == 2.0);
    }
}
