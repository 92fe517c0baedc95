#include <ttplon/model.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ttplon {

std::string_view to_string(Model m) noexcept {
    switch (m) {
    case Model::TTP0:
        return "ttp0";
    case Model::TTPA:
        return "ttpa";
    case Model::TTPB:
        return "ttpb";
    case Model::TTPC:
        return "ttpc";
    }
    return "?";
}

std::optional<Model> parse_model(std::string_view s) noexcept {
    for (Model m : kAllModels) {
        if (to_string(m) == s) {
            return m;
        }
    }
    return std::nullopt;
}

double Instance::total_weight() const noexcept {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

void Instance::validate() const {
    const auto nn = coords.size();
    if (nn == 0) {
        throw DomainError("instance has no cities");
    }
    if (dist.size() != nn * nn) {
        throw DomainError("distance matrix size does not match the number of cities");
    }
    for (int i = 0; i < n(); ++i) {
        if (distance(i, i) != 0.0) {
            throw DomainError("distance matrix has a non-zero diagonal");
        }
        for (int j = 0; j < n(); ++j) {
            const double d = distance(i, j);
            if (!(d >= 0.0) || !std::isfinite(d) || d != distance(j, i)) {
                throw DomainError("distance matrix must be finite, non-negative and symmetric");
            }
        }
    }
    if (profits.empty()) {
        throw DomainError("instance has no items");
    }
    if (weights.size() != profits.size() || item_city.size() != profits.size()) {
        throw DomainError("item arrays have different lengths");
    }
    for (std::size_t k = 0; k < profits.size(); ++k) {
        if (!(profits[k] > 0.0) || !(weights[k] > 0.0)) {
            throw DomainError("item " + std::to_string(k + 1) + " has a non-positive profit or weight");
        }
        if (item_city[k] < 1 || item_city[k] >= n()) {
            throw DomainError("item " + std::to_string(k + 1) + " is not assigned to a non-start city");
        }
    }
    if (!(capacity > 0.0)) {
        throw DomainError("capacity must be positive");
    }
    if (!(v_min > 0.0) || !(v_max >= v_min)) {
        throw DomainError("speeds must satisfy v_max >= v_min > 0");
    }
    if (!(renting_rate >= 0.0)) {
        throw DomainError("renting rate must be non-negative");
    }
    if (!(drop_rate > 0.0 && drop_rate <= 1.0)) {
        throw DomainError("drop rate must lie in (0, 1]");
    }
    if (!(drop_interval > 0.0)) {
        throw DomainError("drop interval must be positive");
    }
}

std::vector<double> ceil2d_distances(std::span<const Point> coords) {
    const std::size_t n = coords.size();
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = coords[i].x - coords[j].x;
            const double dy = coords[i].y - coords[j].y;
            const double v = std::ceil(std::sqrt(dx * dx + dy * dy));
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    }
    return d;
}

void check_shape(const Instance& inst, const Solution& s) {
    const int n = inst.n();
    if (static_cast<int>(s.tour.size()) != n || s.tour.empty() || s.tour.front() != 0) {
        throw DomainError("tour must list every city once and start at city 1");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int c : s.tour) {
        if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)]) {
            throw DomainError("tour is not a permutation of the cities");
        }
        seen[static_cast<std::size_t>(c)] = true;
    }
    if (static_cast<int>(s.plan.size()) != inst.m()) {
        throw DomainError("plan length does not match the number of items");
    }
}

double plan_weight(const Instance& inst, std::span<const std::uint8_t> plan) {
    double w = 0.0;
    for (std::size_t k = 0; k < plan.size(); ++k) {
        if (plan[k]) {
            w += inst.weights[k];
        }
    }
    return w;
}

bool is_feasible(const Instance& inst, std::span<const std::uint8_t> plan) {
    return plan_weight(inst, plan) <= inst.capacity;
}

double velocity_at(double load, const Instance& inst) {
    if (!(load >= 0.0) || load > inst.capacity) {
        throw DomainError("knapsack load " + std::to_string(load) + " outside [0, W]");
    }
    const double k = (inst.v_max - inst.v_min) / inst.capacity;
    return inst.v_max - k * load;
}

Trajectory simulate(const Instance& inst, const Solution& s, bool load_dependent) {
    if (!is_feasible(inst, s.plan)) {
        throw InfeasibleError("picking plan exceeds the knapsack capacity");
    }
    const std::size_t n = s.tour.size();
    const std::size_t m = s.plan.size();

    // Tour position of every city, so items can be picked on arrival.
    std::vector<std::size_t> pos_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        pos_of[static_cast<std::size_t>(s.tour[i])] = i;
    }
    std::vector<double> picked_at(n, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        if (s.plan[k]) {
            picked_at[pos_of[static_cast<std::size_t>(inst.item_city[k])]] += inst.weights[k];
        }
    }

    Trajectory t;
    t.leg_times.resize(n);
    t.load_at.resize(n);
    double load = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        load += picked_at[i];
        t.load_at[i] = load;
        const double v = load_dependent ? velocity_at(load, inst) : inst.v_max;
        t.leg_times[i] = inst.distance(s.tour[i], s.tour[(i + 1) % n]) / v;
    }

    // Time remaining from arrival at each position; summed backwards so the
    // carry time of any item never exceeds the total.
    std::vector<double> remaining(n + 1, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        remaining[i] = t.leg_times[i] + remaining[i + 1];
    }
    t.total_time = remaining[0];

    t.carry_time.assign(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        if (s.plan[k]) {
            t.carry_time[k] = remaining[pos_of[static_cast<std::size_t>(inst.item_city[k])]];
        }
    }
    return t;
}

double raw_value(const Instance& inst, std::span<const std::uint8_t> plan) {
    if (!is_feasible(inst, plan)) {
        throw InfeasibleError("picking plan exceeds the knapsack capacity");
    }
    double g = 0.0;
    for (std::size_t k = 0; k < plan.size(); ++k) {
        if (plan[k]) {
            g += inst.profits[k];
        }
    }
    return g;
}

double dropped_value(const Instance& inst, const Trajectory& traj, std::span<const std::uint8_t> plan) {
    double g = 0.0;
    for (std::size_t k = 0; k < plan.size(); ++k) {
        if (plan[k]) {
            const double intervals = std::ceil(traj.carry_time[k] / inst.drop_interval);
            g += inst.profits[k] * std::pow(inst.drop_rate, intervals);
        }
    }
    return g;
}

double fitness(const Instance& inst, const Solution& s, Model model) {
    const Trajectory t = simulate(inst, s, is_load_dependent(model));
    const double g = has_item_drop(model) ? dropped_value(inst, t, s.plan) : raw_value(inst, s.plan);
    return g - inst.renting_rate * t.total_time;
}

} // namespace ttplon
