#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include <ttplon/experiment.hpp>
#include <ttplon/export.hpp>
#include <ttplon/graph_metrics.hpp>
#include <ttplon/instance_io.hpp>
#include <ttplon/lon.hpp>

namespace ttplon::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<Model> parse_models(const std::string& s) {
    if (s == "all") {
        return {std::begin(kAllModels), std::end(kAllModels)};
    }
    std::vector<Model> out;
    for (const auto& item : split_list(s)) {
        const auto m = parse_model(item);
        if (!m) {
            throw UsageError("unknown model '" + item + "'");
        }
        out.push_back(*m);
    }
    return out;
}

std::vector<Correlation> parse_correlations(const std::string& s) {
    if (s == "all") {
        return {std::begin(kAllCorrelations), std::end(kAllCorrelations)};
    }
    std::vector<Correlation> out;
    for (const auto& item : split_list(s)) {
        const auto c = parse_correlation(item);
        if (!c) {
            throw UsageError("unknown correlation '" + item + "'");
        }
        out.push_back(*c);
    }
    return out;
}

template <class T>
T parse_number(const std::string& item, const char* what) {
    std::istringstream ss(item);
    T v{};
    if (!(ss >> v) || !ss.eof()) {
        throw UsageError(std::string("invalid ") + what + " '" + item + "'");
    }
    return v;
}

std::vector<int> parse_caps(const std::string& s, bool non_standard) {
    if (s == "all") {
        return {std::begin(kStandardCapacityClasses), std::end(kStandardCapacityClasses)};
    }
    std::vector<int> out;
    for (const auto& item : split_list(s)) {
        const int c = parse_number<int>(item, "capacity class");
        const bool standard = std::ranges::find(kStandardCapacityClasses, c) != std::end(kStandardCapacityClasses);
        if (!standard && !non_standard) {
            throw UsageError("capacity class " + item + " is outside {2,5,10}; pass --non-standard to allow it");
        }
        if (c < 1 || c > 10) {
            throw UsageError("capacity class must lie in [1, 10]");
        }
        out.push_back(c);
    }
    return out;
}

std::vector<double> parse_drops(const std::string& s, bool non_standard) {
    if (s == "all") {
        return {std::begin(kStandardDropRates), std::end(kStandardDropRates)};
    }
    std::vector<double> out;
    for (const auto& item : split_list(s)) {
        const double d = parse_number<double>(item, "drop rate");
        const bool standard = std::ranges::find(kStandardDropRates, d) != std::end(kStandardDropRates);
        if (!standard && !non_standard) {
            throw UsageError("drop rate " + item + " is outside {0.9,0.95,0.98}; pass --non-standard to allow it");
        }
        if (!(d > 0.0 && d <= 1.0)) {
            throw UsageError("drop rate must lie in (0, 1]");
        }
        out.push_back(d);
    }
    return out;
}

NeighbourhoodPolicy parse_policy_flag(const std::string& s) {
    const auto p = parse_policy(s);
    if (!p) {
        throw UsageError("unknown policy '" + s + "' (expected identities or strict)");
    }
    return *p;
}

/// Flags shared by generate and experiment.
struct ClassFlags {
    std::string model = "all";
    std::string corr = "all";
    std::string cap = "all";
    std::string drop = "all";
    int count = 1;
    std::uint64_t seed = 1;
    int n_cities = 7;
    int n_items = 6;
    bool non_standard = false;
    std::string out;

    void add_to(CLI::App& app) {
        app.add_option("--model", model, "ttp0|ttpa|ttpb|ttpc|all or a comma list");
        app.add_option("--corr", corr, "u|usw|bsc|all or a comma list");
        app.add_option("--cap", cap, "2|5|10|all or a comma list");
        app.add_option("--drop", drop, "0.9|0.95|0.98|all or a comma list");
        app.add_option("--seed", seed, "experiment seed");
        app.add_option("--n-cities", n_cities, "number of cities");
        app.add_option("--n-items", n_items, "number of items");
        app.add_flag("--non-standard", non_standard, "allow parameters outside the standard experimental grid");
    }

    ExperimentConfig to_config() const {
        ExperimentConfig cfg;
        cfg.models = parse_models(model);
        cfg.correlations = parse_correlations(corr);
        cfg.capacity_classes = parse_caps(cap, non_standard);
        cfg.drop_rates = parse_drops(drop, non_standard);
        cfg.instances_per_class = count;
        cfg.seed = seed;
        cfg.n_cities = n_cities;
        cfg.n_items = n_items;
        cfg.allow_non_standard = non_standard;
        if (!non_standard && (n_cities != 7 || n_items != n_cities - 1)) {
            throw UsageError("only 7 cities and 6 items are in the standard domain; pass --non-standard to change them");
        }
        if (count < 1) {
            throw UsageError("--count must be positive");
        }
        return cfg;
    }
};

int cmd_generate(const ClassFlags& flags, std::ostream& out, std::ostream& err) {
    ExperimentConfig cfg = flags.to_config();
    if (cfg.models.empty() || cfg.correlations.empty() || cfg.capacity_classes.empty()) {
        throw UsageError("empty model, correlation or capacity list");
    }
    check_enumeration_guard(cfg.n_cities, cfg.n_items);
    const std::filesystem::path dir = flags.out.empty() ? "." : flags.out;
    std::filesystem::create_directories(dir);

    // Same coordinates and per-instance seeds as the experiment runner.
    std::mt19937_64 coord_rng(derive_seed(cfg.seed, 0xC00D));
    const std::vector<Point> coords = generate_coords(cfg.n_cities, 100.0, coord_rng);

    out << "file,seed,attempts\n";
    for (const ClassKey& key : experiment_classes(cfg)) {
        for (int i = 0; i < cfg.instances_per_class; ++i) {
            GeneratorConfig g;
            g.n_cities = cfg.n_cities;
            g.n_items = cfg.n_items;
            g.correlation = key.correlation;
            g.capacity_class = key.capacity_class;
            g.drop_rate = key.drop_rate;
            g.model = key.model;
            g.seed = instance_seed(cfg.seed, key.correlation, key.capacity_class, i);
            g.shared_coords = coords;
            g.allow_non_standard = cfg.allow_non_standard;
            GeneratedInstance gen;
            try {
                gen = generate_with_retry(g, cfg.max_attempts);
            } catch (const DegenerateInstanceError& e) {
                err << "error: " << class_label(key) << " #" << i << ": no valid instance after "
                    << cfg.max_attempts << " attempts (" << e.what() << ")\n";
                return kFailure;
            }
            const std::string label = class_label(key) + "_" + std::to_string(i);
            gen.instance.name = label;
            const std::filesystem::path file = dir / ("inst_" + label + ".ttp");
            write_instance(gen.instance, file);
            out << file.string() << ',' << gen.seed << ',' << gen.attempts << '\n';
        }
    }
    return kSuccess;
}

struct LonFlags {
    std::string instance;
    std::string model;
    std::string policy = "strict";
    int workers = 1;
    std::string out;
    std::string dot;
    std::string graphml;
};

void metrics_row(const MetricsRecord& m, std::ostream& out) {
    out << "space_size,nv,ne,c,cr,l,l_defined,components,b\n"
        << m.space_size << ',' << m.n_v << ',' << m.n_e << ',' << csv_real(m.clustering) << ','
        << csv_real(m.er_clustering) << ',' << csv_real(m.path_length) << ',' << (m.path_length_defined ? 1 : 0)
        << ',' << m.components << ',' << csv_real(m.mean_basin) << '\n';
}

int cmd_lon(const LonFlags& flags, std::ostream& out, std::ostream& err) {
    const auto model = parse_model(flags.model);
    if (!model) {
        throw UsageError("--model must be one of ttp0, ttpa, ttpb, ttpc");
    }
    const NeighbourhoodPolicy policy = parse_policy_flag(flags.policy);
    if (flags.workers < 1) {
        throw UsageError("--workers must be positive");
    }
    const Instance inst = read_instance(flags.instance);
    if (has_item_drop(*model) && inst.drop_rate == 1.0) {
        err << "warning: " << flags.instance << " has no DROPPING RATE; running " << to_string(*model)
            << " with D=1\n";
    }
    const Lon lon = extract_lon(inst, *model, policy, flags.workers);
    const MetricsRecord m = metrics(lon, flags.workers);

    auto open = [](const std::string& path) {
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw std::runtime_error("cannot write " + path);
        }
        return f;
    };
    if (!flags.out.empty()) {
        auto f = open(flags.out);
        f << lon_to_json(lon, m).dump() << '\n';
    }
    if (!flags.dot.empty()) {
        auto f = open(flags.dot);
        write_dot(lon, f);
    }
    if (!flags.graphml.empty()) {
        auto f = open(flags.graphml);
        write_graphml(lon, f);
    }
    metrics_row(m, out);
    return kSuccess;
}

int cmd_experiment(const ClassFlags& flags, const std::string& policy, int workers, std::ostream& out,
                   std::ostream& err) {
    if (flags.out.empty()) {
        throw UsageError("--out is required");
    }
    ExperimentConfig cfg = flags.to_config();
    cfg.policy = parse_policy_flag(policy);
    if (workers < 1) {
        throw UsageError("--workers must be positive");
    }
    cfg.workers = workers;
    try {
        validate(cfg);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const Report report = run_experiment(cfg);
    for (const auto& line : report.log) {
        err << line << '\n';
    }
    write_report(report, flags.out);
    write_correlations_csv(report, out);
    if (!report.complete) {
        err << "error: at least one class ended below the requested instance count\n";
        return kIncomplete;
    }
    return kSuccess;
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
    return std::ranges::any_of(args, [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

/// Expands "experiment --config FILE" into the flags the file sets and the
/// command line does not.
std::vector<std::string> with_config_defaults(const std::vector<std::string>& args) {
    if (args.empty() || args.front() != "experiment") {
        return args;
    }
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty() || !std::filesystem::is_regular_file(path)) {
        return args;
    }
    std::vector<std::string> out = args;
    for (const CLI::ConfigItem& item : CLI::ConfigINI().from_file(path)) {
        if (item.name == "++" || item.name == "--") {
            continue; // section markers
        }
        std::string name = item.name;
        std::ranges::replace(name, '_', '-');
        const std::string flag = "--" + name;
        if (name == "config" || has_flag(args, flag)) {
            continue;
        }
        if (name == "non-standard") {
            if (!item.inputs.empty() && CLI::detail::to_flag_value(item.inputs.front()) > 0) {
                out.push_back("--non-standard");
            }
            continue;
        }
        out.push_back(flag);
        std::string value;
        for (const auto& v : item.inputs) {
            value += (value.empty() ? "" : ",") + v;
        }
        out.push_back(value);
    }
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local optima network analysis of Travelling Thief Problem interdependency models", "ttplon"};
    app.require_subcommand(1);

    ClassFlags gen_flags;
    gen_flags.model = "ttpa";
    auto* generate = app.add_subcommand("generate", "write random instance files");
    gen_flags.add_to(*generate);
    generate->add_option("--count", gen_flags.count, "instances per class");
    generate->add_option("--out", gen_flags.out, "output directory");

    LonFlags lon_flags;
    auto* lon = app.add_subcommand("lon", "extract the LON of one instance");
    lon->add_option("--instance", lon_flags.instance, "instance file")->required()->check(CLI::ExistingFile);
    lon->add_option("--model", lon_flags.model, "ttp0|ttpa|ttpb|ttpc")->required();
    lon->add_option("--policy", lon_flags.policy, "identities|strict");
    lon->add_option("--workers", lon_flags.workers, "worker threads");
    lon->add_option("--out", lon_flags.out, "LON JSON output file");
    lon->add_option("--dot", lon_flags.dot, "Graphviz DOT output file");
    lon->add_option("--graphml", lon_flags.graphml, "GraphML output file");

    ClassFlags exp_flags;
    exp_flags.count = 100;
    std::string exp_policy = "strict";
    int exp_workers = 1;
    auto* experiment = app.add_subcommand("experiment", "run the full class-by-class LON study");
    exp_flags.add_to(*experiment);
    experiment->add_option("--count", exp_flags.count, "instances per class");
    experiment->add_option("--policy", exp_policy, "identities|strict");
    experiment->add_option("--workers", exp_workers, "worker threads");
    experiment->add_option("--out", exp_flags.out, "report directory");
    std::string exp_config;
    experiment->add_option("--config", exp_config, "flat key=value file mirroring the flags; flags win")
        ->check(CLI::ExistingFile);

    try {
        const std::vector<std::string> full = with_config_defaults(args);
        std::vector<std::string> reversed(full.rbegin(), full.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*generate) {
            return cmd_generate(gen_flags, out, err);
        }
        if (*lon) {
            return cmd_lon(lon_flags, out, err);
        }
        return cmd_experiment(exp_flags, exp_policy, exp_workers, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const SizeGuardError& e) {
        err << "refused: " << e.what() << '\n';
        return kSizeGuard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace ttplon::cli
