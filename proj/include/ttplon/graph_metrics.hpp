#pragma once

/// @file graph_metrics.hpp
/// @brief Small-world statistics of undirected LONs.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <ttplon/lon.hpp>

namespace ttplon {

/// Simple undirected graph in compressed adjacency form (sorted neighbour lists).
class UndirectedGraph {
  public:
    /// Self-loops are rejected; duplicate edges are merged.
    UndirectedGraph(int node_count, std::span<const std::pair<int, int>> edges);

    static UndirectedGraph from_lon(const Lon& lon);

    int node_count() const noexcept { return static_cast<int>(offsets_.size()) - 1; }
    std::uint64_t edge_count() const noexcept { return adjacency_.size() / 2; }
    int degree(int v) const noexcept { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
    std::span<const int> neighbours(int v) const noexcept {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

  private:
    std::vector<std::size_t> offsets_;
    std::vector<int> adjacency_;
};

/// Mean local clustering coefficient; nodes of degree < 2 contribute 0.
double clustering_coefficient(const UndirectedGraph& g);

/// Clustering expected for an Erdos-Renyi graph with the same node and edge
/// counts, i.e. the edge density. 0 for fewer than two nodes.
double er_clustering(std::uint64_t n_v, std::uint64_t n_e) noexcept;

struct PathLengthStats {
    double mean = 0.0;              // 0 when undefined
    bool defined = false;           // false when no pair of nodes is connected
    std::uint64_t connected_pairs = 0; // unordered
    int components = 0;
};

/// Mean shortest-path length over connected unordered pairs, exact (bit-parallel BFS).
PathLengthStats avg_path_length(const UndirectedGraph& g, int workers = 1);

/// One row of the LON metrics tables.
struct MetricsRecord {
    std::uint64_t n_v = 0;
    std::uint64_t n_e = 0;
    double clustering = 0.0;    // C
    double er_clustering = 0.0; // C_r
    double path_length = 0.0;   // l
    bool path_length_defined = false;
    int components = 0;
    double mean_basin = 0.0;    // |B|
    std::uint64_t space_size = 0;

    bool operator==(const MetricsRecord&) const = default;
};

MetricsRecord metrics(const Lon& lon, int workers = 1);

} // namespace ttplon
