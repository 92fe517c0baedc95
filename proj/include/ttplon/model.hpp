#pragma once

/// @file model.hpp
/// @brief Travelling Thief Problem data types and the four objective functions.
///
/// Cities and items are indexed from 0 internally. City 0 is the start city and
/// every tour begins there. The instance file format (see instance_io.hpp) uses
/// the conventional 1-based numbering.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <ttplon/errors.hpp>

namespace ttplon {

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

/// Interdependency model.
///
/// TTP0: no coupling. TTPA: load slows the thief. TTPB: items lose value over
/// carrying time. TTPC: both couplings.
enum class Model { TTP0, TTPA, TTPB, TTPC };

inline constexpr Model kAllModels[] = {Model::TTP0, Model::TTPA, Model::TTPB, Model::TTPC};

/// True for the models whose travel time depends on the knapsack load.
constexpr bool is_load_dependent(Model m) noexcept {
    return m == Model::TTPA || m == Model::TTPC;
}

/// True for the models whose item values drop with carrying time.
constexpr bool has_item_drop(Model m) noexcept {
    return m == Model::TTPB || m == Model::TTPC;
}

std::string_view to_string(Model m) noexcept;
std::optional<Model> parse_model(std::string_view s) noexcept;

/// Full problem datum.
struct Instance {
    std::string name;
    std::string knapsack_type;      // "u", "usw" or "bsc"; informational
    std::vector<Point> coords;      // n cities
    std::vector<double> dist;       // n*n, row-major
    std::vector<double> profits;    // m items
    std::vector<double> weights;    // m items
    std::vector<int> item_city;     // m entries in [1, n)
    double capacity = 0.0;
    double v_max = 1.0;
    double v_min = 0.1;
    double renting_rate = 0.0;
    double drop_rate = 1.0;         // 1 means no drop
    double drop_interval = 10.0;

    int n() const noexcept { return static_cast<int>(coords.size()); }
    int m() const noexcept { return static_cast<int>(profits.size()); }

    double distance(int i, int j) const noexcept {
        return dist[static_cast<std::size_t>(i) * coords.size() + static_cast<std::size_t>(j)];
    }

    double total_weight() const noexcept;

    /// Throws DomainError on any structural violation (sizes, symmetric
    /// non-negative distances, item cities, speed ordering, drop rate range).
    void validate() const;

    bool operator==(const Instance&) const = default;
};

/// Distance matrix with TSPLIB CEIL_2D rounding (ceiling of the Euclidean distance).
std::vector<double> ceil2d_distances(std::span<const Point> coords);

/// A tour (permutation of 0..n-1 starting at 0) and a binary picking plan.
struct Solution {
    std::vector<int> tour;
    std::vector<std::uint8_t> plan;

    auto operator<=>(const Solution&) const = default;
};

/// Throws DomainError if the tour is not a permutation starting at city 0 or
/// the plan length does not match the instance.
void check_shape(const Instance& inst, const Solution& s);

double plan_weight(const Instance& inst, std::span<const std::uint8_t> plan);
bool is_feasible(const Instance& inst, std::span<const std::uint8_t> plan);

/// Result of walking a tour with a given picking plan.
struct Trajectory {
    std::vector<double> leg_times;  // leg i leaves tour position i; last leg returns to the start
    std::vector<double> load_at;    // knapsack weight when departing tour position i
    double total_time = 0.0;
    std::vector<double> carry_time; // per item; 0 when not picked

    bool operator==(const Trajectory&) const = default;
};

/// Velocity for a given knapsack load: v_max - (v_max - v_min) / W * load.
double velocity_at(double load, const Instance& inst);

/// Walks the tour. Items are picked on arrival, so the leg leaving a city
/// already carries the items collected there. With `load_dependent` false the
/// thief always travels at v_max.
Trajectory simulate(const Instance& inst, const Solution& s, bool load_dependent);

/// Total profit of a feasible plan.
double raw_value(const Instance& inst, std::span<const std::uint8_t> plan);

/// Total profit after the per-interval value drop p_k * D^ceil(T_k / interval).
double dropped_value(const Instance& inst, const Trajectory& traj, std::span<const std::uint8_t> plan);

/// Objective value (to be maximised) of a feasible solution under `model`.
double fitness(const Instance& inst, const Solution& s, Model model);

} // namespace ttplon
