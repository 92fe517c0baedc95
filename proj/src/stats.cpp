#include <ttplon/stats.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include <ttplon/instance_io.hpp>

namespace ttplon {

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        while (j < n && values[order[j]] == values[order[i]]) {
            ++j;
        }
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) {
            ranks[order[k]] = rank;
        }
        i = j;
    }
    return ranks;
}

SpearmanResult spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw DomainError("spearman inputs have different lengths");
    }
    if (x.size() < 2) {
        throw DomainError("spearman needs at least two observations");
    }
    const std::vector<double> rx = average_ranks(x);
    const std::vector<double> ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        return {0.0, true};
    }
    return {std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0), false};
}

double fisher_mean(std::span<const double> rhos) {
    if (rhos.empty()) {
        throw DomainError("fisher_mean needs at least one correlation");
    }
    double z = 0.0;
    for (double r : rhos) {
        z += std::atanh(std::clamp(r, -kFisherClamp, kFisherClamp));
    }
    return std::tanh(z / static_cast<double>(rhos.size()));
}

std::string class_label(const ClassKey& key) {
    std::string label = std::string(to_string(key.model)) + "_" + std::string(to_string(key.correlation)) + "_c" +
                        std::to_string(key.capacity_class);
    if (key.drop_rate) {
        label += "_d" + format_real(*key.drop_rate);
    }
    return label;
}

MetricStat summarize(std::span<const double> values) {
    MetricStat s;
    s.count = values.size();
    if (values.empty()) {
        return s;
    }
    const double n = static_cast<double>(values.size());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    if (values.size() >= 2) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        s.std = std::sqrt(ss / (n - 1.0));
    }
    return s;
}

ClassSummary aggregate_class(const ClassKey& key, std::span<const InstanceStats> records) {
    ClassSummary out;
    out.key = key;
    out.count = records.size();
    out.std_defined = records.size() >= 2;

    auto column = [&](auto get) {
        std::vector<double> v;
        v.reserve(records.size());
        for (const InstanceStats& r : records) {
            v.push_back(get(r.metrics));
        }
        return summarize(v);
    };
    out.n_v = column([](const MetricsRecord& m) { return static_cast<double>(m.n_v); });
    out.n_e = column([](const MetricsRecord& m) { return static_cast<double>(m.n_e); });
    out.clustering = column([](const MetricsRecord& m) { return m.clustering; });
    out.er_clustering = column([](const MetricsRecord& m) { return m.er_clustering; });
    out.mean_basin = column([](const MetricsRecord& m) { return m.mean_basin; });

    std::vector<double> lengths;
    std::vector<double> rhos;
    for (const InstanceStats& r : records) {
        if (r.metrics.path_length_defined) {
            lengths.push_back(r.metrics.path_length);
        }
        if (r.rho.degenerate) {
            ++out.rho_degenerate;
        } else {
            rhos.push_back(r.rho.rho);
        }
    }
    out.path_length = summarize(lengths);
    if (!rhos.empty()) {
        out.rho_fisher = fisher_mean(rhos);
        out.rho_defined = true;
    }
    return out;
}

} // namespace ttplon
