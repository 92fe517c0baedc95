#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include <ttplon/errors.hpp>
#include <ttplon/graph_metrics.hpp>

#include "toy_instances.hpp"

using namespace ttplon;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

UndirectedGraph make(int n, const EdgeList& e) {
    return UndirectedGraph(n, e);
}

// Naive references: adjacency matrix clustering and one BFS per source.
double naive_clustering(int n, const EdgeList& edges) {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (auto [a, b] : edges) {
        adj[a][b] = adj[b][a] = true;
    }
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (int u = 0; u < n; ++u) {
            if (adj[v][u]) {
                nb.push_back(u);
            }
        }
        if (nb.size() < 2) {
            continue;
        }
        int links = 0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                links += adj[nb[i]][nb[j]] ? 1 : 0;
            }
        }
        const double d = static_cast<double>(nb.size());
        sum += links / (d * (d - 1) / 2);
    }
    return n == 0 ? 0.0 : sum / n;
}

double naive_path_length(int n, const EdgeList& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    double total = 0;
    double pairs = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int u : adj[v]) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
            }
        }
        for (int t = s + 1; t < n; ++t) {
            if (dist[t] > 0) {
                total += dist[t];
                pairs += 1;
            }
        }
    }
    return pairs == 0 ? 0.0 : total / pairs;
}

EdgeList random_graph(int n, double p, std::mt19937_64& rng) {
    EdgeList e;
    std::bernoulli_distribution coin(p);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (coin(rng)) {
                e.emplace_back(a, b);
            }
        }
    }
    return e;
}

} // namespace

TEST_CASE("clustering coefficient") {
    CHECK(clustering_coefficient(make(3, {{0, 1}, {1, 2}, {0, 2}})) == 1.0);
    CHECK(clustering_coefficient(make(4, {{0, 1}, {0, 2}, {0, 3}})) == 0.0);
    // K4 minus the edge 2-3.
    CHECK(clustering_coefficient(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})) ==
          doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(clustering_coefficient(make(0, {})) == 0.0);
}

TEST_CASE("equivalent random graph clustering") {
    CHECK(er_clustering(4, 3) == 0.5);
    CHECK(er_clustering(10, 0) == 0.0);
    CHECK(er_clustering(7, 21) == 1.0);
    CHECK(er_clustering(1, 0) == 0.0);
}

TEST_CASE("average path length") {
    const auto path = avg_path_length(make(3, {{0, 1}, {1, 2}}));
    CHECK(path.mean == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(path.defined);
    CHECK(path.components == 1);

    CHECK(avg_path_length(make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})).mean ==
          1.0);

    const auto split = avg_path_length(make(4, {{0, 1}, {2, 3}}));
    CHECK(split.mean == 1.0);
    CHECK(split.components == 2);
    CHECK(split.connected_pairs == 2);

    const auto isolated = avg_path_length(make(3, {}));
    CHECK_FALSE(isolated.defined);
    CHECK(isolated.mean == 0.0);
    CHECK(isolated.components == 3);
}

TEST_CASE("fast kernels match naive references on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 150);
        const double p = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
        const EdgeList e = random_graph(n, p, rng);
        const UndirectedGraph g = make(n, e);
        CHECK(g.edge_count() == e.size());
        CHECK(clustering_coefficient(g) == doctest::Approx(naive_clustering(n, e)).epsilon(1e-12));
        CHECK(avg_path_length(g).mean == doctest::Approx(naive_path_length(n, e)).epsilon(1e-12));
        CHECK(avg_path_length(g, 3).mean == avg_path_length(g, 1).mean);
    }
}

TEST_CASE("metrics are invariant under node relabeling") {
    std::mt19937_64 rng(6);
    const int n = 90;
    const EdgeList e = random_graph(n, 0.08, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EdgeList relabeled;
    for (auto [a, b] : e) {
        relabeled.emplace_back(perm[a], perm[b]);
    }
    const UndirectedGraph g1 = make(n, e);
    const UndirectedGraph g2 = make(n, relabeled);
    CHECK(clustering_coefficient(g1) == doctest::Approx(clustering_coefficient(g2)).epsilon(1e-14));
    CHECK(avg_path_length(g1).mean == avg_path_length(g2).mean);
}

TEST_CASE("graph construction") {
    const UndirectedGraph g = make(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK_THROWS_AS(make(3, {{1, 1}}), DomainError);
    CHECK_THROWS_AS(make(3, {{0, 3}}), DomainError);
}

TEST_CASE("metrics of LONs") {
    SUBCASE("single node") {
        Lon lon;
        lon.nodes.resize(1);
        lon.nodes[0].basin_size = 10;
        lon.space_size = 10;
        const MetricsRecord m = metrics(lon);
        CHECK(m.n_v == 1);
        CHECK(m.n_e == 0);
        CHECK(m.clustering == 0.0);
        CHECK(m.er_clustering == 0.0);
        CHECK_FALSE(m.path_length_defined);
        CHECK(m.mean_basin == 10.0);
    }
    SUBCASE("toy LON against naive recomputation") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Instance inst = ttplon::testing::toy_generated(seed, Model::TTP0, Correlation::BSC, 10);
            const Lon lon = extract_lon(inst, Model::TTP0);
            EdgeList e;
            for (const LonEdge& edge : lon.edges) {
                e.emplace_back(edge.source, edge.target);
            }
            const int n = static_cast<int>(lon.nodes.size());
            const MetricsRecord m = metrics(lon);
            CHECK(m.n_v == lon.nodes.size());
            CHECK(m.n_e == e.size());
            CHECK(m.clustering == doctest::Approx(naive_clustering(n, e)).epsilon(1e-12));
            CHECK(m.path_length == doctest::Approx(naive_path_length(n, e)).epsilon(1e-12));
            CHECK(m.mean_basin * static_cast<double>(m.n_v) == doctest::Approx(static_cast<double>(lon.space_size)));
        }
    }
    SUBCASE("full-size LON bounds") {
        const Instance inst = ttplon::testing::standard_instance(3, Model::TTPA, Correlation::U, 2);
        const Lon lon = extract_lon(inst, Model::TTPA);
        const MetricsRecord m = metrics(lon, 2);
        CHECK(m.clustering >= 0.0);
        CHECK(m.clustering <= 1.0);
        CHECK(m.er_clustering >= 0.0);
        CHECK(m.er_clustering <= 1.0);
        if (m.n_e > 0) {
            CHECK(m.path_length >= 1.0);
        }
        CHECK(m == metrics(lon, 1));
    }
}
