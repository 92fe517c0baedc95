#pragma once

// Brute-force LON construction written independently of lon.cpp and search.cpp:
// explicit solution values in ordered maps, its own neighbour generation and
// its own climb loop. Only the fitness evaluator is shared.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <ttplon/model.hpp>
#include <ttplon/search.hpp>

namespace ttplon::testing {

struct OracleLon {
    std::map<Solution, Solution> optimum_of;      // every feasible solution
    std::map<Solution, std::size_t> basin_size;   // keyed by optimum
    std::set<std::pair<Solution, Solution>> edges; // ordered pair (smaller, larger)
};

inline bool oracle_feasible(const Instance& inst, const std::vector<std::uint8_t>& plan) {
    double w = 0.0;
    for (std::size_t k = 0; k < plan.size(); ++k) {
        if (plan[k]) {
            w += inst.weights[k];
        }
    }
    return w <= inst.capacity;
}

inline std::vector<Solution> oracle_neighbours(const Instance& inst, const Solution& s, NeighbourhoodPolicy policy) {
    const bool with_identity = policy == NeighbourhoodPolicy::WithIdentities;
    std::vector<std::vector<int>> tours;
    if (with_identity) {
        tours.push_back(s.tour);
    }
    const std::size_t n = s.tour.size();
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<int> t = s.tour;
            for (std::size_t a = i, b = j; a < b; ++a, --b) {
                std::swap(t[a], t[b]);
            }
            tours.push_back(t);
        }
    }
    std::vector<std::vector<std::uint8_t>> plans;
    if (with_identity) {
        plans.push_back(s.plan);
    }
    for (std::size_t k = 0; k < s.plan.size(); ++k) {
        std::vector<std::uint8_t> p = s.plan;
        p[k] = p[k] ? 0 : 1;
        if (oracle_feasible(inst, p)) {
            plans.push_back(p);
        }
    }
    std::vector<Solution> out;
    for (const auto& t : tours) {
        for (const auto& p : plans) {
            if (t == s.tour && p == s.plan && with_identity) {
                continue;
            }
            out.push_back({t, p});
        }
    }
    return out;
}

inline std::vector<Solution> oracle_all_solutions(const Instance& inst) {
    std::vector<Solution> all;
    std::vector<int> tour(static_cast<std::size_t>(inst.n()));
    std::iota(tour.begin(), tour.end(), 0);
    do {
        for (unsigned code = 0; code < (1U << inst.m()); ++code) {
            std::vector<std::uint8_t> plan(static_cast<std::size_t>(inst.m()));
            for (std::size_t k = 0; k < plan.size(); ++k) {
                plan[k] = (code >> k) & 1U;
            }
            if (oracle_feasible(inst, plan)) {
                all.push_back({tour, plan});
            }
        }
    } while (std::next_permutation(tour.begin() + 1, tour.end()));
    return all;
}

inline OracleLon oracle_lon(const Instance& inst, Model model, NeighbourhoodPolicy policy) {
    std::map<Solution, double> fit;
    auto f = [&](const Solution& s) {
        auto it = fit.find(s);
        if (it == fit.end()) {
            it = fit.emplace(s, fitness(inst, s, model)).first;
        }
        return it->second;
    };

    OracleLon out;
    const auto all = oracle_all_solutions(inst);
    for (const Solution& start : all) {
        Solution s = start;
        for (bool improved = true; improved;) {
            improved = false;
            const Solution sweep_start = s;
            for (const Solution& nb : oracle_neighbours(inst, sweep_start, policy)) {
                if (f(nb) > f(s)) {
                    s = nb;
                    improved = true;
                }
            }
        }
        out.optimum_of[start] = s;
        ++out.basin_size[s];
    }
    for (const Solution& s : all) {
        const Solution& a = out.optimum_of.at(s);
        for (const Solution& nb : oracle_neighbours(inst, s, policy)) {
            const Solution& b = out.optimum_of.at(nb);
            if (a != b) {
                out.edges.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
            }
        }
    }
    return out;
}

} // namespace ttplon::testing
