#pragma once

/// @file lon.hpp
/// @brief Exhaustive Local Optima Network extraction.
///
/// Every feasible solution is mapped to the optimum its local search reaches.
/// Optima become nodes weighted by basin size; two nodes are joined when some
/// solution of one basin has a joint neighbour in the other.

#include <cstdint>
#include <functional>
#include <vector>

#include <ttplon/generator.hpp>
#include <ttplon/model.hpp>
#include <ttplon/search.hpp>

namespace ttplon {

/// Dense bijection between solutions and integers in [0, (n-1)! * 2^m).
///
/// index = tour_rank * 2^m + plan_code, where tour_rank is the lexicographic
/// rank (factorial number system) of the n-1 free tour positions and bit k of
/// plan_code is the pick flag of item k.
class SolutionIndexer {
  public:
    SolutionIndexer(int n_cities, int n_items);

    int n_cities() const noexcept { return n_; }
    int n_items() const noexcept { return m_; }
    std::uint64_t tour_count() const noexcept { return tour_count_; }
    std::uint64_t plan_count() const noexcept { return std::uint64_t{1} << m_; }
    std::uint64_t size() const noexcept { return tour_count_ * plan_count(); }

    std::uint64_t tour_rank(std::span<const int> tour) const;
    std::vector<int> tour_at(std::uint64_t rank) const;
    static std::uint64_t plan_code(std::span<const std::uint8_t> plan) noexcept;
    std::vector<std::uint8_t> plan_at(std::uint64_t code) const;

    std::uint64_t encode(const Solution& s) const {
        return tour_rank(s.tour) * plan_count() + plan_code(s.plan);
    }
    Solution decode(std::uint64_t index) const {
        return {tour_at(index / plan_count()), plan_at(index % plan_count())};
    }

  private:
    int n_;
    int m_;
    std::uint64_t tour_count_;
    std::vector<std::uint64_t> factorial_;
};

struct EnumerationCounts {
    std::uint64_t feasible = 0;
    std::uint64_t infeasible = 0;
};

/// Visits every feasible solution in ascending index order. Throws SizeGuardError
/// when the space exceeds kEnumerationLimit.
EnumerationCounts enumerate_solutions(const Instance& inst,
                                      const std::function<void(std::uint64_t, const Solution&)>& visit);

/// Index-based view of the search space with every fitness precomputed.
///
/// Produces exactly the same neighbour order and acceptance decisions as
/// joint_neighbours / run_local_search, on indices instead of Solution values.
class IndexedLandscape {
  public:
    static constexpr double kInfeasible = -1.0e300;

    IndexedLandscape(const Instance& inst, Model model, NeighbourhoodPolicy policy);

    const SolutionIndexer& indexer() const noexcept { return indexer_; }
    std::uint64_t size() const noexcept { return fitness_.size(); }
    bool feasible(std::uint64_t index) const noexcept { return plan_feasible_[index % plans_]; }
    double fitness(std::uint64_t index) const noexcept { return fitness_[index]; }
    std::uint64_t feasible_count() const noexcept { return feasible_count_; }

    template <class Fn>
    void for_each_neighbour(std::uint64_t index, Fn&& fn) const {
        const std::uint64_t tour = index / plans_;
        const std::uint64_t plan = index % plans_;
        const std::size_t t_begin = static_cast<std::size_t>(tour) * tour_stride_;
        const std::size_t p_begin = static_cast<std::size_t>(plan) * plan_stride_;
        const std::uint32_t t_count = tour_nbr_count_;
        const std::uint32_t p_count = plan_nbr_count_[plan];
        for (std::uint32_t ti = 0; ti < t_count; ++ti) {
            const std::uint64_t base = tour_nbr_[t_begin + ti] * plans_;
            for (std::uint32_t pi = 0; pi < p_count; ++pi) {
                if (identities_ && ti == 0 && pi == 0) {
                    continue;
                }
                fn(base + plan_nbr_[p_begin + pi]);
            }
        }
    }

    /// One sweep of the local search from `index`; returns the incumbent at the end.
    std::uint64_t sweep(std::uint64_t index) const;

    /// Full local search from `index`.
    std::uint64_t climb(std::uint64_t index) const;

  private:
    SolutionIndexer indexer_;
    std::uint64_t plans_;
    bool identities_;
    std::vector<double> fitness_;
    std::vector<bool> plan_feasible_;
    std::uint64_t feasible_count_ = 0;
    // Neighbour tables in scan order, identity first under WithIdentities.
    std::size_t tour_stride_ = 0;
    std::uint32_t tour_nbr_count_ = 0;
    std::vector<std::uint64_t> tour_nbr_;
    std::size_t plan_stride_ = 0;
    std::vector<std::uint32_t> plan_nbr_count_;
    std::vector<std::uint64_t> plan_nbr_;
};

struct LonNode {
    Solution optimum;
    std::uint64_t index = 0; // SolutionIndexer index of the optimum
    double fitness = 0.0;
    std::uint64_t basin_size = 0;

    bool operator==(const LonNode&) const = default;
};

/// Undirected edge with source < target.
struct LonEdge {
    int source = 0;
    int target = 0;
    /// Neighbour pairs (s, s') with s and s' in the two different basins,
    /// counted in both directions.
    std::uint64_t transition_count = 0;

    bool operator==(const LonEdge&) const = default;
};

struct Lon {
    int n_cities = 0;
    int n_items = 0;
    std::vector<LonNode> nodes;           // ordered by optimum index
    std::vector<LonEdge> edges;           // ordered by (source, target)
    std::vector<std::int32_t> basin_of;   // per solution index; -1 when infeasible
    std::uint64_t space_size = 0;         // feasible solutions

    bool operator==(const Lon&) const = default;
};

/// Builds the LON. Work is split over `workers` threads; the result does not
/// depend on the worker count.
Lon extract_lon(const Instance& inst, Model model, NeighbourhoodPolicy policy = NeighbourhoodPolicy::StrictComposition,
                int workers = 1);

} // namespace ttplon
