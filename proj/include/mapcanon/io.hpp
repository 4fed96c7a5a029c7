#pragma once

#include <string>
#include <vector>

#include "mapcanon/graph.hpp"

namespace mapcanon {

/// Result of loading a corpus: graphs in deterministic (path, line) order
/// plus a list of per-record failures with their origin.
struct CorpusLoad {
    std::vector<Graph> graphs;
    std::vector<std::string> errors;
};

/// Loads graphs from a file or a directory. A .json file may hold a single
/// object or one object per line (JSON lines); anything else parses as an
/// edge list. Directories are scanned non-recursively in sorted filename
/// order. Failures are collected, not thrown.
CorpusLoad load_graphs(const std::string& path);

/// Single-file variant honoring an explicit format.
CorpusLoad load_graphs_from_file(const std::string& path, GraphFormat format);

}  // namespace mapcanon
