#include <ttplon/generator.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace ttplon {

std::string_view to_string(Correlation c) noexcept {
    switch (c) {
    case Correlation::U:
        return "u";
    case Correlation::USW:
        return "usw";
    case Correlation::BSC:
        return "bsc";
    }
    return "?";
}

std::optional<Correlation> parse_correlation(std::string_view s) noexcept {
    for (Correlation c : kAllCorrelations) {
        if (to_string(c) == s) {
            return c;
        }
    }
    return std::nullopt;
}

std::uint64_t search_space_size(int n_cities, int n_items) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (n_cities < 1 || n_items < 0 || n_items >= 64) {
        return kMax;
    }
    std::uint64_t size = std::uint64_t{1} << n_items;
    for (int k = 2; k < n_cities; ++k) {
        if (size > kMax / static_cast<std::uint64_t>(k)) {
            return kMax;
        }
        size *= static_cast<std::uint64_t>(k);
    }
    return size;
}

void check_enumeration_guard(int n_cities, int n_items) {
    if (search_space_size(n_cities, n_items) > kEnumerationLimit) {
        throw SizeGuardError("(n-1)! * 2^m exceeds the enumeration bound of " +
                             std::to_string(kEnumerationLimit) + " for n=" + std::to_string(n_cities) +
                             ", m=" + std::to_string(n_items));
    }
}

bool is_standard_config(const GeneratorConfig& cfg) noexcept {
    const bool cap_ok = std::ranges::find(kStandardCapacityClasses, cfg.capacity_class) !=
                        std::end(kStandardCapacityClasses);
    const bool drop_ok = !cfg.drop_rate ||
                         std::ranges::find(kStandardDropRates, *cfg.drop_rate) != std::end(kStandardDropRates);
    return cfg.n_cities == 7 && cfg.n_items == cfg.n_cities - 1 && cap_ok && drop_ok;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double compute_capacity(std::span<const double> weights, int capacity_class, bool allow_non_standard) {
    if (weights.empty()) {
        throw DomainError("capacity needs at least one item weight");
    }
    const bool standard = std::ranges::find(kStandardCapacityClasses, capacity_class) !=
                       std::end(kStandardCapacityClasses);
    if (!standard && !(allow_non_standard && capacity_class >= 1 && capacity_class <= 10)) {
        throw DomainError("capacity class " + std::to_string(capacity_class) + " is not supported");
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    return static_cast<double>(capacity_class) * total / 11.0;
}

std::pair<std::vector<double>, std::vector<double>> generate_items(Correlation corr, int m, std::mt19937_64& rng) {
    std::vector<double> profits(static_cast<std::size_t>(m));
    std::vector<double> weights(static_cast<std::size_t>(m));
    std::uniform_int_distribution<int> base(1, 1000);
    std::uniform_int_distribution<int> similar(1000, 1010);
    for (std::size_t k = 0; k < profits.size(); ++k) {
        switch (corr) {
        case Correlation::U:
            weights[k] = base(rng);
            profits[k] = base(rng);
            break;
        case Correlation::USW:
            weights[k] = similar(rng);
            profits[k] = base(rng);
            break;
        case Correlation::BSC:
            weights[k] = base(rng);
            profits[k] = weights[k] + 100.0;
            break;
        }
    }
    return {std::move(profits), std::move(weights)};
}

std::vector<Point> generate_coords(int n, double box, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(0.0, box);
    std::vector<Point> pts(static_cast<std::size_t>(n));
    for (auto& p : pts) {
        p.x = coord(rng);
        p.y = coord(rng);
    }
    return pts;
}

double compute_renting_rate(const Instance& inst, Model model) {
    check_enumeration_guard(inst.n(), inst.m());
    const auto m = static_cast<std::size_t>(inst.m());

    // Best feasible plan; the lowest plan code wins ties.
    std::vector<std::uint8_t> plan(m), best_plan(m);
    double best_value = 0.0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
        for (std::size_t k = 0; k < m; ++k) {
            plan[k] = static_cast<std::uint8_t>((code >> k) & 1U);
        }
        if (!is_feasible(inst, plan)) {
            continue;
        }
        const double g = raw_value(inst, plan);
        if (g > best_value) {
            best_value = g;
            best_plan = plan;
        }
    }
    if (!(best_value > 0.0)) {
        throw DegenerateInstanceError("no item fits the knapsack; renting rate undefined");
    }

    // Shortest tour at constant speed; the lexicographically first one wins ties.
    std::vector<int> tour(static_cast<std::size_t>(inst.n()));
    std::iota(tour.begin(), tour.end(), 0);
    std::vector<int> best_tour = tour;
    double best_length = std::numeric_limits<double>::infinity();
    do {
        double length = 0.0;
        for (std::size_t i = 0; i < tour.size(); ++i) {
            length += inst.distance(tour[i], tour[(i + 1) % tour.size()]);
        }
        if (length < best_length) {
            best_length = length;
            best_tour = tour;
        }
    } while (std::next_permutation(tour.begin() + 1, tour.end()));

    const Trajectory t = simulate(inst, Solution{best_tour, best_plan}, is_load_dependent(model));
    if (!(t.total_time > 0.0)) {
        throw DegenerateInstanceError("optimal tour has zero travel time; renting rate undefined");
    }
    return best_value / t.total_time;
}

Instance generate_instance(const GeneratorConfig& cfg) {
    if (cfg.n_cities < 2 || cfg.n_items < 1) {
        throw DomainError("generator needs at least 2 cities and 1 item");
    }
    if (!cfg.allow_non_standard && !is_standard_config(cfg)) {
        throw DomainError("generator config lies outside the standard domain; set allow_non_standard");
    }
    if (cfg.drop_rate && !(*cfg.drop_rate > 0.0 && *cfg.drop_rate <= 1.0)) {
        throw DomainError("drop rate must lie in (0, 1]");
    }

    Instance inst;
    inst.knapsack_type = std::string(to_string(cfg.correlation));
    inst.name = "gen_" + inst.knapsack_type + "_c" + std::to_string(cfg.capacity_class) + "_s" +
                std::to_string(cfg.seed);

    if (cfg.shared_coords) {
        if (static_cast<int>(cfg.shared_coords->size()) != cfg.n_cities) {
            throw DomainError("shared coordinates do not match n_cities");
        }
        inst.coords = *cfg.shared_coords;
    } else {
        std::mt19937_64 coord_rng(derive_seed(cfg.seed, 1));
        inst.coords = generate_coords(cfg.n_cities, cfg.coord_box, coord_rng);
    }
    inst.dist = ceil2d_distances(inst.coords);

    std::mt19937_64 item_rng(derive_seed(cfg.seed, 2));
    std::tie(inst.profits, inst.weights) = generate_items(cfg.correlation, cfg.n_items, item_rng);
    inst.item_city.resize(static_cast<std::size_t>(cfg.n_items));
    for (int k = 0; k < cfg.n_items; ++k) {
        inst.item_city[static_cast<std::size_t>(k)] = 1 + k % (cfg.n_cities - 1);
    }
    inst.capacity = compute_capacity(inst.weights, cfg.capacity_class, cfg.allow_non_standard);
    inst.v_max = cfg.v_max;
    inst.v_min = cfg.v_min;
    inst.drop_rate = cfg.drop_rate.value_or(1.0);
    inst.drop_interval = cfg.drop_interval;
    inst.validate();
    inst.renting_rate = compute_renting_rate(inst, cfg.model);
    return inst;
}

GeneratedInstance generate_with_retry(GeneratorConfig cfg, int max_attempts) {
    for (int attempt = 1;; ++attempt) {
        try {
            return {generate_instance(cfg), cfg.seed, attempt};
        } catch (const DegenerateInstanceError&) {
            if (attempt >= max_attempts) {
                throw;
            }
            ++cfg.seed;
        }
    }
}

} // namespace ttplon
