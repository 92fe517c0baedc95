#pragma once

/// @file export.hpp
/// @brief LON serialisation (JSON, DOT, GraphML) and experiment CSV tables.
///
/// JSON is the canonical LON format and round-trips exactly. DOT and GraphML
/// carry only the graph with node attributes fitness and basin_size and edge
/// attribute transition_count.
///
/// Every CSV file starts with a schema line "# ttplon <file> v1".

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include <ttplon/experiment.hpp>
#include <ttplon/graph_metrics.hpp>
#include <ttplon/lon.hpp>

namespace ttplon {

inline constexpr const char* kLonSchema = "ttplon-lon/1";
inline constexpr const char* kCsvSchemaVersion = "v1";

nlohmann::json lon_to_json(const Lon& lon, const std::optional<MetricsRecord>& metrics = std::nullopt);
/// Throws std::runtime_error on schema violations.
Lon lon_from_json(const nlohmann::json& j);

void write_dot(const Lon& lon, std::ostream& out);
void write_graphml(const Lon& lon, std::ostream& out);

/// printf("%.17g") formatting used by every CSV column.
std::string csv_real(double v);

void write_summary_csv(const Report& report, std::ostream& out);
void write_instances_csv(const Report& report, std::ostream& out);
void write_correlations_csv(const Report& report, std::ostream& out);
void write_fitness_basin_csv(const Report& report, std::ostream& out);

/// Writes summary.csv, instances.csv, correlations.csv and fitness_basin.csv.
void write_report(const Report& report, const std::filesystem::path& dir);

} // namespace ttplon
