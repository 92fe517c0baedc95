#pragma once

/// @file stats.hpp
/// @brief Rank correlation, Fisher z averaging and per-class aggregation.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <ttplon/generator.hpp>
#include <ttplon/graph_metrics.hpp>
#include <ttplon/model.hpp>

namespace ttplon {

struct SpearmanResult {
    double rho = 0.0;
    bool degenerate = false; // one input is constant; rho reported as 0
};

/// Average ranks (ties share the mean of their positions), 1-based.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman correlation: Pearson correlation of the average-rank vectors.
/// Throws DomainError when lengths differ or are below 2.
SpearmanResult spearman(std::span<const double> x, std::span<const double> y);

/// Inputs are clamped to this magnitude before the z-transform.
inline constexpr double kFisherClamp = 0.999999;

/// tanh of the mean of atanh(rho_i). Throws DomainError on empty input.
double fisher_mean(std::span<const double> rhos);

/// Identifies one experimental class.
struct ClassKey {
    Model model = Model::TTPA;
    Correlation correlation = Correlation::U;
    int capacity_class = 2;
    std::optional<double> drop_rate; // present iff the model drops item values

    bool operator==(const ClassKey&) const = default;
};

std::string class_label(const ClassKey& key);

struct MetricStat {
    double mean = 0.0;
    double std = 0.0;     // sample standard deviation, 0 when count < 2
    std::uint64_t count = 0;
};

struct ClassSummary {
    ClassKey key;
    std::uint64_t count = 0;
    bool std_defined = false; // false when fewer than two instances
    MetricStat n_v;
    MetricStat n_e;
    MetricStat clustering;
    MetricStat er_clustering;
    MetricStat path_length;   // over instances where l is defined
    MetricStat mean_basin;
    double rho_fisher = 0.0;
    bool rho_defined = false;
    std::uint64_t rho_degenerate = 0; // excluded from rho_fisher
};

/// Mean and sample standard deviation in input order.
MetricStat summarize(std::span<const double> values);

struct InstanceStats {
    MetricsRecord metrics;
    SpearmanResult rho;
};

ClassSummary aggregate_class(const ClassKey& key, std::span<const InstanceStats> records);

} // namespace ttplon
