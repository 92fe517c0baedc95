#pragma once

/// @file generator.hpp
/// @brief Random TTP instance generation over correlation, capacity and drop-rate classes.
///
/// Item data follows the knapsack benchmark conventions:
///   - u:   weights and profits independent, uniform integers in [1, 1000]
///   - usw: weights uniform in [1000, 1010], profits uniform in [1, 1000]
///   - bsc: weights uniform in [1, 1000], profit = weight + 100
/// Capacity is (C/11) times the total item weight. City coordinates are drawn
/// uniformly from a square box and distances use CEIL_2D rounding. The renting
/// rate is g(Z*) / f(X*, Z*) with Z* the best feasible plan and X* the shortest
/// tour, both found by exhaustive search.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <ttplon/model.hpp>

namespace ttplon {

enum class Correlation { U, USW, BSC };

inline constexpr Correlation kAllCorrelations[] = {Correlation::U, Correlation::USW, Correlation::BSC};
inline constexpr int kStandardCapacityClasses[] = {2, 5, 10};
inline constexpr double kStandardDropRates[] = {0.9, 0.95, 0.98};

std::string_view to_string(Correlation c) noexcept;
std::optional<Correlation> parse_correlation(std::string_view s) noexcept;

/// Largest (n-1)! * 2^m accepted by the exhaustive routines.
inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

/// (n-1)! * 2^m, saturating at UINT64_MAX.
std::uint64_t search_space_size(int n_cities, int n_items) noexcept;

/// Throws SizeGuardError when search_space_size exceeds kEnumerationLimit.
void check_enumeration_guard(int n_cities, int n_items);

struct GeneratorConfig {
    int n_cities = 7;
    int n_items = 6;
    Correlation correlation = Correlation::U;
    int capacity_class = 2;
    std::optional<double> drop_rate; // only for models B and C
    Model model = Model::TTPA;       // selects the travel-time convention of the renting rate
    double coord_box = 100.0;
    double v_max = 1.0;
    double v_min = 0.1;
    double drop_interval = 10.0;
    std::uint64_t seed = 0;
    std::optional<std::vector<Point>> shared_coords;
    bool allow_non_standard = false;
};

/// True when the config stays inside the published experimental domain.
bool is_standard_config(const GeneratorConfig& cfg) noexcept;

/// Deterministic 64-bit mix of a seed and a stream tag (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// W = (C / 11) * sum(weights). Classes outside {2, 5, 10} need `allow_non_standard`
/// and must still lie in [1, 10] so that the capacity stays binding.
double compute_capacity(std::span<const double> weights, int capacity_class, bool allow_non_standard = false);

/// Draws profits and weights for `m` items.
std::pair<std::vector<double>, std::vector<double>> generate_items(Correlation corr, int m, std::mt19937_64& rng);

/// Uniform coordinates in [0, box) x [0, box).
std::vector<Point> generate_coords(int n, double box, std::mt19937_64& rng);

/// Exhaustive renting rate. The renting_rate field of `inst` is ignored.
/// Throws SizeGuardError or DegenerateInstanceError.
double compute_renting_rate(const Instance& inst, Model model);

/// Builds one instance from the config. Throws DegenerateInstanceError when no
/// single item fits the knapsack.
Instance generate_instance(const GeneratorConfig& cfg);

struct GeneratedInstance {
    Instance instance;
    std::uint64_t seed = 0; // seed that produced the instance
    int attempts = 1;
};

/// Retries degenerate draws with seed + 1, seed + 2, ... up to `max_attempts`.
/// Rethrows the last DegenerateInstanceError when every attempt fails.
GeneratedInstance generate_with_retry(GeneratorConfig cfg, int max_attempts = 100);

} // namespace ttplon
