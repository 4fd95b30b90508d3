#pragma once

#include <iosfwd>
#include <string>

#include "twdl/graph.hpp"
#include "twdl/interval.hpp"

namespace twdl {

/// Edge-list text format: first line "n m", then m lines "u v" (0-indexed).
/// Lines whose first non-space character is '#' are comments. Parse errors
/// raise std::runtime_error; endpoint validation comes from build_graph.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

/// Interval-model text format: first line "n", then n lines "id L R" with
/// decimal endpoints; each id 0..n-1 appears exactly once. '#' comments as
/// above. Endpoints round-trip exactly (written with full precision).
IntervalModel read_interval_model(std::istream& in);
IntervalModel read_interval_model_file(const std::string& path);

void write_interval_model(std::ostream& out, const IntervalModel& m);
void write_interval_model_file(const std::string& path, const IntervalModel& m);

} // namespace twdl
