#include <ttplon/search.hpp>

#include <algorithm>

namespace ttplon {

std::string_view to_string(NeighbourhoodPolicy p) noexcept {
    return p == NeighbourhoodPolicy::WithIdentities ? "identities" : "strict";
}

std::optional<NeighbourhoodPolicy> parse_policy(std::string_view s) noexcept {
    if (s == "identities") {
        return NeighbourhoodPolicy::WithIdentities;
    }
    if (s == "strict") {
        return NeighbourhoodPolicy::StrictComposition;
    }
    return std::nullopt;
}

void apply_two_opt(std::span<int> tour, int i, int j) noexcept {
    std::reverse(tour.begin() + i, tour.begin() + j + 1);
}

std::vector<std::vector<int>> tsp_neighbours(std::span<const int> tour) {
    const int n = static_cast<int>(tour.size());
    std::vector<std::vector<int>> out;
    if (n >= 3) {
        out.reserve(static_cast<std::size_t>((n - 1) * (n - 2) / 2));
    }
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<int>& t = out.emplace_back(tour.begin(), tour.end());
            apply_two_opt(t, i, j);
        }
    }
    return out;
}

std::vector<std::vector<std::uint8_t>> kp_neighbours(std::span<const std::uint8_t> plan, const Instance& inst) {
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> flipped(plan.begin(), plan.end());
    for (std::size_t k = 0; k < plan.size(); ++k) {
        flipped[k] ^= 1U;
        if (is_feasible(inst, flipped)) {
            out.push_back(flipped);
        }
        flipped[k] ^= 1U;
    }
    return out;
}

std::vector<Solution> joint_neighbours(const Solution& s, const Instance& inst, NeighbourhoodPolicy policy) {
    const bool identities = policy == NeighbourhoodPolicy::WithIdentities;
    std::vector<std::vector<int>> tours;
    if (identities) {
        tours.push_back(s.tour);
    }
    for (auto& t : tsp_neighbours(s.tour)) {
        tours.push_back(std::move(t));
    }
    std::vector<std::vector<std::uint8_t>> plans;
    if (identities) {
        plans.push_back(s.plan);
    }
    for (auto& p : kp_neighbours(s.plan, inst)) {
        plans.push_back(std::move(p));
    }

    std::vector<Solution> out;
    out.reserve(tours.size() * plans.size());
    for (std::size_t ti = 0; ti < tours.size(); ++ti) {
        for (std::size_t pi = 0; pi < plans.size(); ++pi) {
            if (identities && ti == 0 && pi == 0) {
                continue;
            }
            out.push_back(Solution{tours[ti], plans[pi]});
        }
    }
    return out;
}

LocalSearchResult run_local_search(const Instance& inst, Model model, const Solution& start,
                                   NeighbourhoodPolicy policy) {
    check_shape(inst, start);
    LocalSearchResult r;
    r.optimum = start;
    r.fitness = fitness(inst, start, model);
    for (;;) {
        ++r.sweeps;
        bool improved = false;
        for (const Solution& nb : joint_neighbours(r.optimum, inst, policy)) {
            const double f = fitness(inst, nb, model);
            if (f > r.fitness) {
                r.optimum = nb;
                r.fitness = f;
                r.accepted.push_back(f);
                improved = true;
            }
        }
        if (!improved) {
            return r;
        }
    }
}

} // namespace ttplon
