#pragma once

/// @file experiment.hpp
/// @brief Batch runner: generate a population per class, extract every LON and
/// summarise the landscape statistics.
///
/// Instances of a given (correlation, capacity, index) share their item data
/// across models and drop rates; only the renting rate and drop rate differ.
/// All classes share one set of city coordinates.

#include <cstdint>
#include <string>
#include <vector>

#include <ttplon/generator.hpp>
#include <ttplon/graph_metrics.hpp>
#include <ttplon/search.hpp>
#include <ttplon/stats.hpp>

namespace ttplon {

struct ExperimentConfig {
    std::vector<Model> models{std::begin(kAllModels), std::end(kAllModels)};
    std::vector<Correlation> correlations{std::begin(kAllCorrelations), std::end(kAllCorrelations)};
    std::vector<int> capacity_classes{std::begin(kStandardCapacityClasses), std::end(kStandardCapacityClasses)};
    std::vector<double> drop_rates{std::begin(kStandardDropRates), std::end(kStandardDropRates)};
    int instances_per_class = 100;
    int n_cities = 7;
    int n_items = 6;
    std::uint64_t seed = 1;
    NeighbourhoodPolicy policy = NeighbourhoodPolicy::StrictComposition;
    int workers = 1;
    bool allow_non_standard = false;
    int max_attempts = 100;
    /// Number of leading instances per class whose node (fitness, basin) pairs are kept.
    int scatter_instances = 1;
};

/// Classes in report order: model, correlation, capacity, then drop rate.
std::vector<ClassKey> experiment_classes(const ExperimentConfig& cfg);

/// Seed of the first generation attempt for one (correlation, capacity, index).
std::uint64_t instance_seed(std::uint64_t experiment_seed, Correlation corr, int capacity_class, int index) noexcept;

struct InstanceResult {
    ClassKey key;
    int index = 0;
    std::uint64_t seed = 0;
    int attempts = 0;
    bool ok = false;
    std::string error;
    InstanceStats stats;
};

struct ScatterPoint {
    ClassKey key;
    int index = 0;
    int node = 0;
    double fitness = 0.0;
    std::uint64_t basin_size = 0;
};

struct ModelCorrelation {
    Model model = Model::TTP0;
    double rho_fisher = 0.0;
    bool defined = false;
    std::uint64_t instances = 0;  // contributing (non-degenerate) instances
    std::uint64_t degenerate = 0;
};

struct Report {
    std::vector<InstanceResult> instances; // class order, then index order
    std::vector<ClassSummary> classes;
    std::vector<ModelCorrelation> correlations;
    std::vector<ScatterPoint> scatter;
    std::vector<std::string> log;
    bool complete = true; // every class reached the requested count
};

/// Checks list domains and sizes; throws DomainError.
void validate(const ExperimentConfig& cfg);

Report run_experiment(const ExperimentConfig& cfg);

} // namespace ttplon
