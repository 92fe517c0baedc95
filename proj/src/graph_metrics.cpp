#include <ttplon/graph_metrics.hpp>

#include <algorithm>
#include <bit>
#include <numeric>

#include <ttplon/errors.hpp>
#include <ttplon/parallel.hpp>

namespace ttplon {

UndirectedGraph::UndirectedGraph(int node_count, std::span<const std::pair<int, int>> edges) {
    if (node_count < 0) {
        throw DomainError("negative node count");
    }
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(edges.size() * 2);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= node_count || b >= node_count) {
            throw DomainError("edge endpoint out of range");
        }
        if (a == b) {
            throw DomainError("self-loops are not allowed");
        }
        arcs.emplace_back(a, b);
        arcs.emplace_back(b, a);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
    adjacency_.reserve(arcs.size());
    for (auto [a, b] : arcs) {
        ++offsets_[static_cast<std::size_t>(a) + 1];
        adjacency_.push_back(b);
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
}

UndirectedGraph UndirectedGraph::from_lon(const Lon& lon) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(lon.edges.size());
    for (const LonEdge& e : lon.edges) {
        edges.emplace_back(e.source, e.target);
    }
    return UndirectedGraph(static_cast<int>(lon.nodes.size()), edges);
}

double clustering_coefficient(const UndirectedGraph& g) {
    const int n = g.node_count();
    if (n == 0) {
        return 0.0;
    }
    // Each triangle is found once by orienting edges from lower to higher
    // (degree, id) and intersecting out-lists.
    auto before = [&](int a, int b) {
        const int da = g.degree(a);
        const int db = g.degree(b);
        return da != db ? da < db : a < b;
    };
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbours(v)) {
            if (before(v, u)) {
                out[static_cast<std::size_t>(v)].push_back(u);
            }
        }
        std::sort(out[static_cast<std::size_t>(v)].begin(), out[static_cast<std::size_t>(v)].end());
    }
    std::vector<std::uint64_t> triangles(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        const auto& ov = out[static_cast<std::size_t>(v)];
        for (int u : ov) {
            const auto& ou = out[static_cast<std::size_t>(u)];
            auto a = ov.begin();
            auto b = ou.begin();
            while (a != ov.end() && b != ou.end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++triangles[static_cast<std::size_t>(v)];
                    ++triangles[static_cast<std::size_t>(u)];
                    ++triangles[static_cast<std::size_t>(*a)];
                    ++a;
                    ++b;
                }
            }
        }
    }
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
        const auto d = static_cast<double>(g.degree(v));
        if (d >= 2.0) {
            sum += 2.0 * static_cast<double>(triangles[static_cast<std::size_t>(v)]) / (d * (d - 1.0));
        }
    }
    return sum / static_cast<double>(n);
}

double er_clustering(std::uint64_t n_v, std::uint64_t n_e) noexcept {
    if (n_v < 2) {
        return 0.0;
    }
    const auto nv = static_cast<double>(n_v);
    return 2.0 * static_cast<double>(n_e) / (nv * (nv - 1.0));
}

PathLengthStats avg_path_length(const UndirectedGraph& g, int workers) {
    const int n = g.node_count();
    PathLengthStats stats;
    if (n == 0) {
        return stats;
    }

    // Connected components (union of BFS trees).
    {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::vector<int> queue;
        for (int s = 0; s < n; ++s) {
            if (seen[static_cast<std::size_t>(s)]) {
                continue;
            }
            ++stats.components;
            seen[static_cast<std::size_t>(s)] = true;
            queue.assign(1, s);
            for (std::size_t h = 0; h < queue.size(); ++h) {
                for (int u : g.neighbours(queue[h])) {
                    if (!seen[static_cast<std::size_t>(u)]) {
                        seen[static_cast<std::size_t>(u)] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
    }

    // 64 sources per batch: bit b of visited[v] says source b has reached v.
    const std::uint64_t batches = (static_cast<std::uint64_t>(n) + 63) / 64;
    const int chunks = std::max(1, workers);
    std::vector<std::uint64_t> dist_sum(static_cast<std::size_t>(chunks), 0);
    std::vector<std::uint64_t> pair_count(static_cast<std::size_t>(chunks), 0);
    parallel_chunks(batches, workers, [&](std::uint64_t begin, std::uint64_t end, int chunk) {
        std::vector<std::uint64_t> visited(static_cast<std::size_t>(n));
        std::vector<std::uint64_t> frontier(static_cast<std::size_t>(n));
        std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
        std::uint64_t sum = 0;
        std::uint64_t pairs = 0;
        for (std::uint64_t batch = begin; batch < end; ++batch) {
            std::fill(visited.begin(), visited.end(), 0);
            std::fill(frontier.begin(), frontier.end(), 0);
            const int first = static_cast<int>(batch * 64);
            const int last = std::min(n, first + 64);
            for (int s = first; s < last; ++s) {
                const std::uint64_t bit = std::uint64_t{1} << (s - first);
                visited[static_cast<std::size_t>(s)] |= bit;
                frontier[static_cast<std::size_t>(s)] |= bit;
            }
            for (std::uint64_t depth = 1;; ++depth) {
                std::uint64_t reached = 0;
                for (int v = 0; v < n; ++v) {
                    std::uint64_t acc = 0;
                    for (int u : g.neighbours(v)) {
                        acc |= frontier[static_cast<std::size_t>(u)];
                    }
                    acc &= ~visited[static_cast<std::size_t>(v)];
                    next[static_cast<std::size_t>(v)] = acc;
                    reached += static_cast<std::uint64_t>(std::popcount(acc));
                }
                if (reached == 0) {
                    break;
                }
                for (int v = 0; v < n; ++v) {
                    visited[static_cast<std::size_t>(v)] |= next[static_cast<std::size_t>(v)];
                }
                frontier.swap(next);
                sum += depth * reached;
                pairs += reached;
            }
        }
        dist_sum[static_cast<std::size_t>(chunk)] = sum;
        pair_count[static_cast<std::size_t>(chunk)] = pairs;
    });

    // Ordered pairs: every unordered pair was counted twice.
    const std::uint64_t sum = std::accumulate(dist_sum.begin(), dist_sum.end(), std::uint64_t{0});
    const std::uint64_t pairs = std::accumulate(pair_count.begin(), pair_count.end(), std::uint64_t{0});
    stats.connected_pairs = pairs / 2;
    if (pairs > 0) {
        stats.defined = true;
        stats.mean = static_cast<double>(sum) / static_cast<double>(pairs);
    }
    return stats;
}

MetricsRecord metrics(const Lon& lon, int workers) {
    const UndirectedGraph g = UndirectedGraph::from_lon(lon);
    MetricsRecord r;
    r.n_v = lon.nodes.size();
    r.n_e = g.edge_count();
    r.clustering = clustering_coefficient(g);
    r.er_clustering = er_clustering(r.n_v, r.n_e);
    const PathLengthStats pl = avg_path_length(g, workers);
    r.path_length = pl.mean;
    r.path_length_defined = pl.defined;
    r.components = pl.components;
    r.space_size = lon.space_size;
    r.mean_basin = r.n_v == 0 ? 0.0 : static_cast<double>(lon.space_size) / static_cast<double>(r.n_v);
    return r;
}

} // namespace ttplon
