#pragma once

/// @file instance_io.hpp
/// @brief Line-oriented TTP instance files (TTP benchmark style, CEIL_2D only).
///
/// Example:
///   PROBLEM NAME: demo
///   KNAPSACK DATA TYPE: u
///   DIMENSION: 3
///   NUMBER OF ITEMS: 2
///   CAPACITY OF KNAPSACK: 12.5
///   MIN SPEED: 0.1
///   MAX SPEED: 1
///   RENTING RATIO: 0.75
///   DROPPING RATE: 0.9          (optional, defaults to 1)
///   DROP INTERVAL: 10           (optional, defaults to 10)
///   EDGE_WEIGHT_TYPE: CEIL_2D
///   NODE_COORD_SECTION (INDEX, X, Y):
///   1 0 0
///   ...
///   ITEMS SECTION (INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):
///   1 40 7 2
///   ...
///
/// Indices are 1-based in the file. Reals are written in shortest round-trip form.

#include <filesystem>
#include <iosfwd>
#include <string>

#include <ttplon/model.hpp>

namespace ttplon {

/// Throws ParseError naming the offending line.
Instance parse_instance(std::istream& in);

/// Throws DomainError when the distance matrix is not the CEIL_2D matrix of the coordinates.
void format_instance(const Instance& inst, std::ostream& out);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& inst, const std::filesystem::path& path);

/// Shortest decimal string that parses back to exactly `v`.
std::string format_real(double v);

} // namespace ttplon
