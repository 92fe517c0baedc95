#include <ttplon/experiment.hpp>

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include <ttplon/lon.hpp>

namespace ttplon {

std::vector<ClassKey> experiment_classes(const ExperimentConfig& cfg) {
    std::vector<ClassKey> keys;
    for (Model model : cfg.models) {
        for (Correlation corr : cfg.correlations) {
            for (int cap : cfg.capacity_classes) {
                if (has_item_drop(model)) {
                    for (double drop : cfg.drop_rates) {
                        keys.push_back({model, corr, cap, drop});
                    }
                } else {
                    keys.push_back({model, corr, cap, std::nullopt});
                }
            }
        }
    }
    return keys;
}

std::uint64_t instance_seed(std::uint64_t experiment_seed, Correlation corr, int capacity_class, int index) noexcept {
    std::uint64_t s = derive_seed(experiment_seed, 100 + static_cast<std::uint64_t>(corr));
    s = derive_seed(s, static_cast<std::uint64_t>(capacity_class));
    return derive_seed(s, static_cast<std::uint64_t>(index));
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.models.empty() || cfg.correlations.empty() || cfg.capacity_classes.empty()) {
        throw DomainError("experiment needs at least one model, correlation and capacity class");
    }
    const bool needs_drop = std::ranges::any_of(cfg.models, has_item_drop);
    if (needs_drop && cfg.drop_rates.empty()) {
        throw DomainError("models with item drop need at least one drop rate");
    }
    if (cfg.instances_per_class < 1) {
        throw DomainError("instances per class must be positive");
    }
    if (cfg.workers < 1) {
        throw DomainError("worker count must be positive");
    }
    check_enumeration_guard(cfg.n_cities, cfg.n_items);
    for (const ClassKey& key : experiment_classes(cfg)) {
        GeneratorConfig g;
        g.n_cities = cfg.n_cities;
        g.n_items = cfg.n_items;
        g.capacity_class = key.capacity_class;
        g.drop_rate = key.drop_rate;
        if (!cfg.allow_non_standard && !is_standard_config(g)) {
            throw DomainError("class " + class_label(key) + " lies outside the standard domain");
        }
        if (key.drop_rate && !(*key.drop_rate > 0.0 && *key.drop_rate <= 1.0)) {
            throw DomainError("drop rate must lie in (0, 1]");
        }
    }
}

namespace {

InstanceResult run_one(const ExperimentConfig& cfg, const ClassKey& key, int index,
                       const std::vector<Point>& coords, std::vector<ScatterPoint>* scatter) {
    InstanceResult r;
    r.key = key;
    r.index = index;
    GeneratorConfig g;
    g.n_cities = cfg.n_cities;
    g.n_items = cfg.n_items;
    g.correlation = key.correlation;
    g.capacity_class = key.capacity_class;
    g.drop_rate = key.drop_rate;
    g.model = key.model;
    g.seed = instance_seed(cfg.seed, key.correlation, key.capacity_class, index);
    g.shared_coords = coords;
    g.allow_non_standard = cfg.allow_non_standard;
    r.seed = g.seed;
    try {
        GeneratedInstance gen = generate_with_retry(g, cfg.max_attempts);
        r.seed = gen.seed;
        r.attempts = gen.attempts;
        gen.instance.name = class_label(key) + "_" + std::to_string(index);
        const Lon lon = extract_lon(gen.instance, key.model, cfg.policy, 1);
        r.stats.metrics = metrics(lon, 1);
        if (lon.nodes.size() >= 2) {
            std::vector<double> fit;
            std::vector<double> basin;
            for (const LonNode& node : lon.nodes) {
                fit.push_back(node.fitness);
                basin.push_back(static_cast<double>(node.basin_size));
            }
            r.stats.rho = spearman(fit, basin);
        } else {
            r.stats.rho = {0.0, true};
        }
        if (scatter != nullptr) {
            for (std::size_t v = 0; v < lon.nodes.size(); ++v) {
                scatter->push_back({key, index, static_cast<int>(v), lon.nodes[v].fitness, lon.nodes[v].basin_size});
            }
        }
        r.ok = true;
    } catch (const std::exception& e) {
        r.attempts = std::max(r.attempts, 1);
        r.error = e.what();
    }
    return r;
}

} // namespace

Report run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    const std::vector<ClassKey> keys = experiment_classes(cfg);

    std::mt19937_64 coord_rng(derive_seed(cfg.seed, 0xC00D));
    const std::vector<Point> coords = generate_coords(cfg.n_cities, 100.0, coord_rng);

    const std::size_t per_class = static_cast<std::size_t>(cfg.instances_per_class);
    const std::size_t total = keys.size() * per_class;
    std::vector<InstanceResult> results(total);
    std::vector<std::vector<ScatterPoint>> scatter(total);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t item = next++; item < total; item = next++) {
            const std::size_t cls = item / per_class;
            const int index = static_cast<int>(item % per_class);
            const bool keep = index < cfg.scatter_instances;
            results[item] = run_one(cfg, keys[cls], index, coords, keep ? &scatter[item] : nullptr);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (int w = 1; w < cfg.workers; ++w) {
            pool.emplace_back(worker);
        }
        worker();
    }

    Report report;
    for (std::size_t cls = 0; cls < keys.size(); ++cls) {
        std::vector<InstanceStats> ok;
        for (std::size_t i = 0; i < per_class; ++i) {
            InstanceResult& r = results[cls * per_class + i];
            if (r.attempts > 1) {
                report.log.push_back(class_label(r.key) + " #" + std::to_string(r.index) + ": regenerated " +
                                     std::to_string(r.attempts - 1) + " time(s), final seed " +
                                     std::to_string(r.seed));
            }
            if (r.ok) {
                ok.push_back(r.stats);
            } else {
                report.log.push_back(class_label(r.key) + " #" + std::to_string(r.index) + " failed: " + r.error);
            }
            auto& pts = scatter[cls * per_class + i];
            report.scatter.insert(report.scatter.end(), pts.begin(), pts.end());
        }
        if (ok.size() < per_class) {
            report.complete = false;
        }
        if (!ok.empty()) {
            report.classes.push_back(aggregate_class(keys[cls], ok));
        }
    }
    report.instances = std::move(results);

    for (Model model : cfg.models) {
        ModelCorrelation mc;
        mc.model = model;
        std::vector<double> rhos;
        for (const InstanceResult& r : report.instances) {
            if (r.key.model != model || !r.ok) {
                continue;
            }
            if (r.stats.rho.degenerate) {
                ++mc.degenerate;
            } else {
                rhos.push_back(r.stats.rho.rho);
            }
        }
        mc.instances = rhos.size();
        if (!rhos.empty()) {
            mc.rho_fisher = fisher_mean(rhos);
            mc.defined = true;
        }
        report.correlations.push_back(mc);
    }
    return report;
}

} // namespace ttplon
