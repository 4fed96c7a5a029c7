#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mapcanon/linalg.hpp"

namespace mapcanon {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

/// Undirected weighted graph. Each unordered pair appears at most once,
/// no self-loops in the input (the unit self-loop is added internally when
/// the normalized adjacency is built), weights strictly positive and finite.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    int n_;
    std::vector<Edge> edges_;
};

enum class GraphFormat { json, edgelist };

/// Parses a single graph. JSON: {"n": int, "edges": [[u,v] | [u,v,w], ...]}.
/// Edge list: first data line is n, then "u v [w]" per line, '#' starts a
/// comment. Throws ParseError on malformed syntax, ValidationError on
/// invariant violations.
Graph parse_graph(const std::string& text, GraphFormat format);
Graph parse_graph(std::istream& in, GraphFormat format);

std::string graph_to_json(const Graph& g);

/// Ahat = D^{-1/2} (I + A) D^{-1/2} with D the degree matrix of I + A.
/// Every diagonal degree is >= 1, so the construction never divides by zero,
/// isolated nodes included. The result is symmetrized after construction.
Matrix normalized_adjacency(const Graph& g);

/// Relabels nodes: node i becomes node perm[i].
Graph permute_graph(const Graph& g, std::span<const int> perm);

}  // namespace mapcanon
