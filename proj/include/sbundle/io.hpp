#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sbundle/graph.hpp"

namespace sbundle {

enum class GraphFileFormat { dimacs, edge_list };

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Graph plus the mapping from internal ids back to the labels used in the
// file: DIMACS vertices keep their 1-based numbers; edge-list labels are
// compacted in order of first appearance.
struct ParsedGraph {
    Graph graph;
    std::vector<long long> labels;
    GraphFileFormat format = GraphFileFormat::edge_list;
};

// Parses DIMACS ("c" comments, one "p edge N M" header, "e u v" lines with
// 1-based endpoints; the declared M is advisory) or whitespace-separated
// edge lists ("u v" per line, arbitrary non-negative labels, '%' and '#'
// comments; one leading "rows cols nonzeros" size line is tolerated).
// Without a hint the format is detected from the first significant line:
// "p"/"e" openers mean DIMACS. Self-loops and duplicate edges are dropped.
ParsedGraph parse_graph(std::string_view text,
                        std::optional<GraphFileFormat> hint = std::nullopt);

ParsedGraph load_graph_file(const std::string& path,
                            std::optional<GraphFileFormat> hint = std::nullopt);

struct ResultRecord {
    std::string instance;
    int s = 0;
    int size = 0;
    std::vector<long long> witness;   // original file labels
    int reduced_v = 0;
    int reduced_e = 0;
    std::uint64_t tree_nodes = 0;
    double time_s = 0.0;
    bool timed_out = false;
    std::string variant;

    bool operator==(const ResultRecord&) const = default;
};

enum class ResultFormat { csv, json };

// CSV column order: instance,s,size,witness,reduced_v,reduced_e,tree_nodes,
// time_s,timed_out,variant. The witness cell is space-separated labels.
// JSON is an array of objects with the same field names.
void write_results(std::span<const ResultRecord> records, ResultFormat format,
                   std::ostream& out);

std::vector<ResultRecord> read_results_csv(std::istream& in);
std::vector<ResultRecord> read_results_json(std::istream& in);

}  // namespace sbundle
