#include <ttplon/export.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <ttplon/instance_io.hpp>

namespace ttplon {

nlohmann::json lon_to_json(const Lon& lon, const std::optional<MetricsRecord>& metrics) {
    using nlohmann::json;
    json j;
    j["schema"] = kLonSchema;
    j["n_cities"] = lon.n_cities;
    j["n_items"] = lon.n_items;
    j["space_size"] = lon.space_size;

    json nodes = json::array();
    json basin_sizes = json::array();
    for (std::size_t v = 0; v < lon.nodes.size(); ++v) {
        const LonNode& node = lon.nodes[v];
        json tour = json::array();
        for (int c : node.optimum.tour) {
            tour.push_back(c + 1);
        }
        json plan = json::array();
        for (auto z : node.optimum.plan) {
            plan.push_back(static_cast<int>(z));
        }
        nodes.push_back({{"id", v},
                         {"index", node.index},
                         {"fitness", node.fitness},
                         {"basin_size", node.basin_size},
                         {"tour", std::move(tour)},
                         {"plan", std::move(plan)}});
        basin_sizes.push_back(node.basin_size);
    }
    j["nodes"] = std::move(nodes);

    json edges = json::array();
    for (const LonEdge& e : lon.edges) {
        edges.push_back({{"source", e.source}, {"target", e.target}, {"transition_count", e.transition_count}});
    }
    j["edges"] = std::move(edges);
    j["basin_sizes"] = std::move(basin_sizes);
    j["basin_of"] = lon.basin_of;

    if (metrics) {
        j["metrics"] = {{"n_v", metrics->n_v},
                        {"n_e", metrics->n_e},
                        {"C", metrics->clustering},
                        {"C_r", metrics->er_clustering},
                        {"l", metrics->path_length},
                        {"l_defined", metrics->path_length_defined},
                        {"components", metrics->components},
                        {"B_mean", metrics->mean_basin}};
    }
    return j;
}

Lon lon_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("schema", std::string{}) != kLonSchema) {
        throw std::runtime_error(std::string("LON JSON must carry schema ") + kLonSchema);
    }
    Lon lon;
    lon.n_cities = j.at("n_cities").get<int>();
    lon.n_items = j.at("n_items").get<int>();
    lon.space_size = j.at("space_size").get<std::uint64_t>();
    for (const auto& jn : j.at("nodes")) {
        LonNode node;
        node.index = jn.at("index").get<std::uint64_t>();
        node.fitness = jn.at("fitness").get<double>();
        node.basin_size = jn.at("basin_size").get<std::uint64_t>();
        for (int c : jn.at("tour")) {
            node.optimum.tour.push_back(c - 1);
        }
        for (int z : jn.at("plan")) {
            node.optimum.plan.push_back(static_cast<std::uint8_t>(z));
        }
        if (jn.at("id").get<std::size_t>() != lon.nodes.size()) {
            throw std::runtime_error("LON JSON node ids must be consecutive from 0");
        }
        lon.nodes.push_back(std::move(node));
    }
    for (const auto& je : j.at("edges")) {
        lon.edges.push_back({je.at("source").get<int>(), je.at("target").get<int>(),
                             je.at("transition_count").get<std::uint64_t>()});
    }
    lon.basin_of = j.at("basin_of").get<std::vector<std::int32_t>>();
    return lon;
}

void write_dot(const Lon& lon, std::ostream& out) {
    out << "graph lon {\n";
    for (std::size_t v = 0; v < lon.nodes.size(); ++v) {
        out << "  n" << v << " [fitness=" << format_real(lon.nodes[v].fitness)
            << ", basin_size=" << lon.nodes[v].basin_size << "];\n";
    }
    for (const LonEdge& e : lon.edges) {
        out << "  n" << e.source << " -- n" << e.target << " [transition_count=" << e.transition_count << "];\n";
    }
    out << "}\n";
}

void write_graphml(const Lon& lon, std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"fitness\" for=\"node\" attr.name=\"fitness\" attr.type=\"double\"/>\n"
        << "  <key id=\"basin_size\" for=\"node\" attr.name=\"basin_size\" attr.type=\"long\"/>\n"
        << "  <key id=\"transition_count\" for=\"edge\" attr.name=\"transition_count\" attr.type=\"long\"/>\n"
        << "  <graph id=\"lon\" edgedefault=\"undirected\">\n";
    for (std::size_t v = 0; v < lon.nodes.size(); ++v) {
        out << "    <node id=\"n" << v << "\">\n"
            << "      <data key=\"fitness\">" << format_real(lon.nodes[v].fitness) << "</data>\n"
            << "      <data key=\"basin_size\">" << lon.nodes[v].basin_size << "</data>\n"
            << "    </node>\n";
    }
    for (std::size_t i = 0; i < lon.edges.size(); ++i) {
        const LonEdge& e = lon.edges[i];
        out << "    <edge id=\"e" << i << "\" source=\"n" << e.source << "\" target=\"n" << e.target << "\">\n"
            << "      <data key=\"transition_count\">" << e.transition_count << "</data>\n"
            << "    </edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

std::string csv_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string drop_cell(const ClassKey& key) {
    return key.drop_rate ? format_real(*key.drop_rate) : std::string{};
}

void schema_line(std::ostream& out, const char* file) {
    out << "# ttplon " << file << ' ' << kCsvSchemaVersion << '\n';
}

} // namespace

void write_summary_csv(const Report& report, std::ostream& out) {
    schema_line(out, "summary.csv");
    out << "model,corr,cap,drop,count,nv_mean,nv_std,ne_mean,ne_std,c_mean,c_std,cr_mean,cr_std,l_mean,l_std,"
           "b_mean,b_std,rho_fisher\n";
    for (const ClassSummary& s : report.classes) {
        out << to_string(s.key.model) << ',' << to_string(s.key.correlation) << ',' << s.key.capacity_class << ','
            << drop_cell(s.key) << ',' << s.count;
        for (const MetricStat* m : {&s.n_v, &s.n_e, &s.clustering, &s.er_clustering, &s.path_length, &s.mean_basin}) {
            out << ',' << csv_real(m->mean) << ',' << csv_real(m->std);
        }
        out << ',' << (s.rho_defined ? csv_real(s.rho_fisher) : std::string{}) << '\n';
    }
}

void write_instances_csv(const Report& report, std::ostream& out) {
    schema_line(out, "instances.csv");
    out << "model,corr,cap,drop,index,seed,attempts,ok,space_size,nv,ne,c,cr,l,l_defined,components,b,rho,"
           "rho_degenerate\n";
    for (const InstanceResult& r : report.instances) {
        const MetricsRecord& m = r.stats.metrics;
        out << to_string(r.key.model) << ',' << to_string(r.key.correlation) << ',' << r.key.capacity_class << ','
            << drop_cell(r.key) << ',' << r.index << ',' << r.seed << ',' << r.attempts << ',' << (r.ok ? 1 : 0);
        if (r.ok) {
            out << ',' << m.space_size << ',' << m.n_v << ',' << m.n_e << ',' << csv_real(m.clustering) << ','
                << csv_real(m.er_clustering) << ',' << csv_real(m.path_length) << ','
                << (m.path_length_defined ? 1 : 0) << ',' << m.components << ',' << csv_real(m.mean_basin) << ','
                << csv_real(r.stats.rho.rho) << ',' << (r.stats.rho.degenerate ? 1 : 0) << '\n';
        } else {
            out << ",,,,,,,,,,,\n";
        }
    }
}

void write_correlations_csv(const Report& report, std::ostream& out) {
    schema_line(out, "correlations.csv");
    out << "model,instances,degenerate,rho_fisher\n";
    for (const ModelCorrelation& c : report.correlations) {
        out << to_string(c.model) << ',' << c.instances << ',' << c.degenerate << ','
            << (c.defined ? csv_real(c.rho_fisher) : std::string{}) << '\n';
    }
}

void write_fitness_basin_csv(const Report& report, std::ostream& out) {
    schema_line(out, "fitness_basin.csv");
    out << "model,corr,cap,drop,index,node,fitness,basin_size\n";
    for (const ScatterPoint& p : report.scatter) {
        out << to_string(p.key.model) << ',' << to_string(p.key.correlation) << ',' << p.key.capacity_class << ','
            << drop_cell(p.key) << ',' << p.index << ',' << p.node << ',' << csv_real(p.fitness) << ','
            << p.basin_size << '\n';
    }
}

void write_report(const Report& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto write = [&](const char* name, void (*fn)(const Report&, std::ostream&)) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write " + (dir / name).string());
        }
        fn(report, out);
    };
    write("summary.csv", write_summary_csv);
    write("instances.csv", write_instances_csv);
    write("correlations.csv", write_correlations_csv);
    write("fitness_basin.csv", write_fitness_basin_csv);
}

} // namespace ttplon
