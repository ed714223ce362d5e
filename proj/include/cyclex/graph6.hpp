#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses one graph6 record. Accepts an optional ">>graph6<<" prefix and a
/// trailing CR; rejects anything else that is not part of the encoding.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 line (no trailing newline).
std::string write_graph6(const Graph& g);

/// All records of a graph6 file: one per line, optional header line,
/// LF or CRLF, blank lines ignored.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace cyclex
