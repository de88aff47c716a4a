#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "c5census/graph.hpp"

namespace c5census {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format: first line "n m", then m lines "i j" with i < j, sorted
// lexicographically. write_graph_text is canonical (byte-exact for equal
// graphs); read accepts any edge order but rejects malformed input.
std::string write_graph_text(const Graph& g);
Graph read_graph_text(std::istream& in);
Graph read_graph_text(const std::string& text);
Graph read_graph_file(const std::string& path);

// Blank-line separated blocks of graphs.
std::vector<Graph> read_graph_blocks(std::istream& in);

// Partition file: one line per block, space-separated vertex labels;
// the first line is the exceptional set and may be empty.
Partition read_partition_text(std::istream& in, int n);
Partition read_partition_file(const std::string& path, int n);

}  // namespace c5census
