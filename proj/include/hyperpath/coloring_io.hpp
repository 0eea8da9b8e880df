#pragma once

#include "hyperpath/coloring.hpp"
#include "hyperpath/grid.hpp"
#include "hyperpath/higher_order.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace hyperpath {

// 1-based coordinate tuple.
nlohmann::json point_json(const GridPoint& x);
// Sorted list of coordinate tuples.
nlohmann::json downset_json(const DownSet& s);
// Nested arrays in index order; a bare number when the index box is empty.
nlohmann::json partition_json(const HyperPartition& a);
// Top level of the universe: coordinate tuples (order 2) or sorted 1-based
// parent indices (order >= 3).
nlohmann::json universe_json(const Universe& u, int level);

// {k, q, N, encoding: "colex-rank-array", colors, labels?}
nlohmann::json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j);

EdgeColoring read_coloring(const std::filesystem::path& path);
void write_coloring(const std::filesystem::path& path, const EdgeColoring& c);

// Writes through a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace hyperpath
