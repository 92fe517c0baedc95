#include <ttplon/lon.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include <ttplon/parallel.hpp>

namespace ttplon {

SolutionIndexer::SolutionIndexer(int n_cities, int n_items) : n_(n_cities), m_(n_items) {
    if (n_cities < 1 || n_items < 0 || n_items > 30) {
        throw DomainError("solution indexer needs n >= 1 and 0 <= m <= 30");
    }
    check_enumeration_guard(n_cities, n_items);
    factorial_.assign(static_cast<std::size_t>(n_), 1);
    for (std::size_t k = 1; k < factorial_.size(); ++k) {
        factorial_[k] = factorial_[k - 1] * k;
    }
    tour_count_ = factorial_[static_cast<std::size_t>(n_ - 1)];
}

std::uint64_t SolutionIndexer::tour_rank(std::span<const int> tour) const {
    // Lehmer code of positions 1..n-1 over the cities 1..n-1.
    std::uint64_t rank = 0;
    const auto free = static_cast<std::size_t>(n_ - 1);
    for (std::size_t i = 1; i < tour.size(); ++i) {
        std::uint64_t smaller_after = 0;
        for (std::size_t j = i + 1; j < tour.size(); ++j) {
            smaller_after += tour[j] < tour[i] ? 1 : 0;
        }
        rank += smaller_after * factorial_[free - i];
    }
    return rank;
}

std::vector<int> SolutionIndexer::tour_at(std::uint64_t rank) const {
    std::vector<int> remaining(static_cast<std::size_t>(n_ - 1));
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<int> tour{0};
    tour.reserve(static_cast<std::size_t>(n_));
    for (std::size_t i = 1; i < static_cast<std::size_t>(n_); ++i) {
        const std::uint64_t f = factorial_[static_cast<std::size_t>(n_) - 1 - i];
        const auto digit = static_cast<std::ptrdiff_t>(rank / f);
        rank %= f;
        tour.push_back(remaining[static_cast<std::size_t>(digit)]);
        remaining.erase(remaining.begin() + digit);
    }
    return tour;
}

std::uint64_t SolutionIndexer::plan_code(std::span<const std::uint8_t> plan) noexcept {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < plan.size(); ++k) {
        code |= static_cast<std::uint64_t>(plan[k] & 1U) << k;
    }
    return code;
}

std::vector<std::uint8_t> SolutionIndexer::plan_at(std::uint64_t code) const {
    std::vector<std::uint8_t> plan(static_cast<std::size_t>(m_));
    for (std::size_t k = 0; k < plan.size(); ++k) {
        plan[k] = static_cast<std::uint8_t>((code >> k) & 1U);
    }
    return plan;
}

EnumerationCounts enumerate_solutions(const Instance& inst,
                                      const std::function<void(std::uint64_t, const Solution&)>& visit) {
    const SolutionIndexer idx(inst.n(), inst.m());
    std::vector<std::vector<std::uint8_t>> plans;
    std::vector<bool> feasible;
    for (std::uint64_t code = 0; code < idx.plan_count(); ++code) {
        plans.push_back(idx.plan_at(code));
        feasible.push_back(is_feasible(inst, plans.back()));
    }
    EnumerationCounts counts;
    Solution s;
    for (std::uint64_t t = 0; t < idx.tour_count(); ++t) {
        s.tour = idx.tour_at(t);
        for (std::uint64_t code = 0; code < idx.plan_count(); ++code) {
            if (!feasible[code]) {
                ++counts.infeasible;
                continue;
            }
            ++counts.feasible;
            s.plan = plans[code];
            visit(t * idx.plan_count() + code, s);
        }
    }
    return counts;
}

IndexedLandscape::IndexedLandscape(const Instance& inst, Model model, NeighbourhoodPolicy policy)
    : indexer_(inst.n(), inst.m()), plans_(indexer_.plan_count()),
      identities_(policy == NeighbourhoodPolicy::WithIdentities) {
    const std::uint64_t tours = indexer_.tour_count();

    // Tour neighbour table.
    const int n = inst.n();
    tour_nbr_count_ = static_cast<std::uint32_t>((n >= 3 ? (n - 1) * (n - 2) / 2 : 0) + (identities_ ? 1 : 0));
    tour_stride_ = tour_nbr_count_;
    tour_nbr_.reserve(static_cast<std::size_t>(tours) * tour_stride_);
    for (std::uint64_t t = 0; t < tours; ++t) {
        const std::vector<int> tour = indexer_.tour_at(t);
        if (identities_) {
            tour_nbr_.push_back(t);
        }
        for (const auto& nb : tsp_neighbours(tour)) {
            tour_nbr_.push_back(indexer_.tour_rank(nb));
        }
    }

    // Plan feasibility and bit-flip table.
    plan_feasible_.resize(plans_);
    std::vector<std::vector<std::uint8_t>> plan_vec(plans_);
    for (std::uint64_t code = 0; code < plans_; ++code) {
        plan_vec[code] = indexer_.plan_at(code);
        plan_feasible_[code] = is_feasible(inst, plan_vec[code]);
    }
    plan_stride_ = static_cast<std::size_t>(inst.m()) + 1;
    plan_nbr_.assign(plans_ * plan_stride_, 0);
    plan_nbr_count_.assign(plans_, 0);
    for (std::uint64_t code = 0; code < plans_; ++code) {
        if (!plan_feasible_[code]) {
            continue;
        }
        std::uint32_t count = 0;
        const std::size_t base = static_cast<std::size_t>(code) * plan_stride_;
        if (identities_) {
            plan_nbr_[base + count++] = code;
        }
        for (const auto& nb : kp_neighbours(plan_vec[code], inst)) {
            plan_nbr_[base + count++] = SolutionIndexer::plan_code(nb);
        }
        plan_nbr_count_[code] = count;
    }

    fitness_.assign(indexer_.size(), kInfeasible);
    Solution s;
    for (std::uint64_t t = 0; t < tours; ++t) {
        s.tour = indexer_.tour_at(t);
        for (std::uint64_t code = 0; code < plans_; ++code) {
            if (plan_feasible_[code]) {
                s.plan = plan_vec[code];
                fitness_[t * plans_ + code] = ttplon::fitness(inst, s, model);
                ++feasible_count_;
            }
        }
    }
}

std::uint64_t IndexedLandscape::sweep(std::uint64_t index) const {
    std::uint64_t incumbent = index;
    double best = fitness_[index];
    for_each_neighbour(index, [&](std::uint64_t nb) {
        const double f = fitness_[nb];
        if (f > best) {
            best = f;
            incumbent = nb;
        }
    });
    return incumbent;
}

std::uint64_t IndexedLandscape::climb(std::uint64_t index) const {
    for (;;) {
        const std::uint64_t next = sweep(index);
        if (next == index) {
            return index;
        }
        index = next;
    }
}

Lon extract_lon(const Instance& inst, Model model, NeighbourhoodPolicy policy, int workers) {
    const IndexedLandscape land(inst, model, policy);
    const std::uint64_t size = land.size();
    constexpr std::uint64_t kUnset = ~std::uint64_t{0};

    // A sweep is a pure function of its start, so the optimum of any solution
    // equals the optimum of its sweep successor.
    std::vector<std::uint64_t> successor(size, kUnset);
    parallel_chunks(size, workers, [&](std::uint64_t begin, std::uint64_t end, int) {
        for (std::uint64_t i = begin; i < end; ++i) {
            if (land.feasible(i)) {
                successor[i] = land.sweep(i);
            }
        }
    });

    std::vector<std::uint64_t> optimum(size, kUnset);
    std::vector<std::uint64_t> path;
    for (std::uint64_t i = 0; i < size; ++i) {
        if (successor[i] == kUnset || optimum[i] != kUnset) {
            continue;
        }
        std::uint64_t cur = i;
        while (optimum[cur] == kUnset && successor[cur] != cur) {
            path.push_back(cur);
            cur = successor[cur];
        }
        const std::uint64_t root = optimum[cur] == kUnset ? cur : optimum[cur];
        optimum[cur] = root;
        for (std::uint64_t p : path) {
            optimum[p] = root;
        }
        path.clear();
    }

    Lon lon;
    lon.n_cities = inst.n();
    lon.n_items = inst.m();
    lon.space_size = land.feasible_count();
    lon.basin_of.assign(size, -1);

    std::vector<std::int32_t> node_of(size, -1);
    for (std::uint64_t i = 0; i < size; ++i) {
        if (optimum[i] == i) {
            node_of[i] = static_cast<std::int32_t>(lon.nodes.size());
            lon.nodes.push_back({land.indexer().decode(i), i, land.fitness(i), 0});
        }
    }
    for (std::uint64_t i = 0; i < size; ++i) {
        if (optimum[i] != kUnset) {
            const std::int32_t node = node_of[optimum[i]];
            lon.basin_of[i] = node;
            ++lon.nodes[static_cast<std::size_t>(node)].basin_size;
        }
    }

    // Edge pass: per-chunk counters merged in key order.
    const int chunks = std::max(1, workers);
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partial(static_cast<std::size_t>(chunks));
    parallel_chunks(size, workers, [&](std::uint64_t begin, std::uint64_t end, int chunk) {
        auto& counts = partial[static_cast<std::size_t>(chunk)];
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::int32_t a = lon.basin_of[i];
            if (a < 0) {
                continue;
            }
            land.for_each_neighbour(i, [&](std::uint64_t nb) {
                const std::int32_t b = lon.basin_of[nb];
                if (b != a) {
                    const auto lo = static_cast<std::uint64_t>(std::min(a, b));
                    const auto hi = static_cast<std::uint64_t>(std::max(a, b));
                    ++counts[lo << 32 | hi];
                }
            });
        }
    });
    std::map<std::uint64_t, std::uint64_t> merged;
    for (const auto& counts : partial) {
        for (const auto& [key, c] : counts) {
            merged[key] += c;
        }
    }
    lon.edges.reserve(merged.size());
    for (const auto& [key, c] : merged) {
        lon.edges.push_back({static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffU), c});
    }
    return lon;
}

} // namespace ttplon
