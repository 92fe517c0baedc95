#pragma once

/// @file search.hpp
/// @brief 2-OPT and one-bit-flip neighbourhoods and the joint neighbourhood local search.
///
/// All neighbourhoods are emitted in a fixed order so that the local search,
/// and therefore every basin of attraction, is a pure function of the start.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <ttplon/model.hpp>

namespace ttplon {

/// How the joint neighbourhood treats the unmodified tour and plan.
///
/// StrictComposition (the default) pairs every 2-OPT move with every bit flip, exactly the
/// nested loops of the joint search. WithIdentities also admits pure 2-OPT
/// moves (plan unchanged) and pure bit flips (tour unchanged).
enum class NeighbourhoodPolicy { StrictComposition, WithIdentities };

std::string_view to_string(NeighbourhoodPolicy p) noexcept;
std::optional<NeighbourhoodPolicy> parse_policy(std::string_view s) noexcept;

/// Reverses tour positions [i, j] in place.
void apply_two_opt(std::span<int> tour, int i, int j) noexcept;

/// All 2-OPT neighbours: segment reversals of positions i..j with 1 <= i < j <= n-1
/// (0-based, the start city never moves), in lexicographic (i, j) order.
std::vector<std::vector<int>> tsp_neighbours(std::span<const int> tour);

/// Feasible single bit flips, item 0 first.
std::vector<std::vector<std::uint8_t>> kp_neighbours(std::span<const std::uint8_t> plan, const Instance& inst);

/// Joint neighbourhood in scan order: outer loop over tours, inner over plans.
/// Under WithIdentities the unmodified tour and plan come first in their loops
/// and `s` itself is skipped.
std::vector<Solution> joint_neighbours(const Solution& s, const Instance& inst, NeighbourhoodPolicy policy);

struct LocalSearchResult {
    Solution optimum;
    double fitness = 0.0;
    std::vector<double> accepted; // fitness after each accepted move, strictly increasing
    int sweeps = 0;
};

/// Joint neighbourhood search. Each sweep scans the neighbourhood of the
/// sweep-start solution and replaces the incumbent whenever a neighbour is
/// strictly fitter than it; sweeps repeat until one accepts nothing.
LocalSearchResult run_local_search(const Instance& inst, Model model, const Solution& start,
                                   NeighbourhoodPolicy policy = NeighbourhoodPolicy::StrictComposition);

inline Solution local_search(const Instance& inst, Model model, const Solution& start,
                             NeighbourhoodPolicy policy = NeighbourhoodPolicy::StrictComposition) {
    return run_local_search(inst, model, start, policy).optimum;
}

} // namespace ttplon
