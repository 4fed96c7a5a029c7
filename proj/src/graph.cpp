#include "mapcanon/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mapcanon/errors.hpp"

namespace mapcanon {

namespace {

void validate_edge(int n, const Edge& e, std::set<std::pair<int, int>>& seen) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        throw ValidationError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") has endpoint outside [0," + std::to_string(n) + ")");
    if (e.u == e.v)
        throw ValidationError("self-loop on node " + std::to_string(e.u) +
                              " is not allowed in input");
    if (!(e.w > 0.0) || !std::isfinite(e.w))
        throw ValidationError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") has nonpositive or nonfinite weight");
    const auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
        throw ValidationError("duplicate edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ")");
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ <= 0) throw ValidationError("node count must be positive");
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) validate_edge(n_, e, seen);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    std::istringstream in(text);
    return parse_graph(in, format);
}

static Graph parse_graph_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("graph JSON must be an object with an integer field \"n\"");
    const auto n64 = j["n"].get<std::int64_t>();
    if (n64 <= 0 || n64 > 1'000'000) throw ValidationError("node count must be positive");
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
        for (const auto& item : j["edges"]) {
            if (!item.is_array() || item.size() < 2 || item.size() > 3)
                throw ParseError("each edge must be [u,v] or [u,v,w]");
            if (!item[0].is_number_integer() || !item[1].is_number_integer())
                throw ParseError("edge endpoints must be integers");
            Edge e;
            e.u = item[0].get<int>();
            e.v = item[1].get<int>();
            if (item.size() == 3) {
                if (!item[2].is_number()) throw ParseError("edge weight must be a number");
                e.w = item[2].get<double>();
            }
            edges.push_back(e);
        }
    }
    return Graph(static_cast<int>(n64), std::move(edges));
}

static Graph parse_graph_edgelist(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_n = false;
    int n = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        if (!have_n) {
            if (!(ls >> n)) {
                std::string tok;
                std::istringstream probe(line);
                if (probe >> tok)
                    throw ParseError("line " + std::to_string(lineno) +
                                     ": expected node count");
                continue;  // blank or comment-only line before the header
            }
            std::string extra;
            if (ls >> extra)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected only the node count");
            have_n = true;
            continue;
        }
        Edge e;
        if (!(ls >> e.u)) continue;  // blank line
        if (!(ls >> e.v))
            throw ParseError("line " + std::to_string(lineno) + ": expected \"u v [w]\"");
        if (!(ls >> e.w)) e.w = 1.0;
        std::string extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        edges.push_back(e);
    }
    if (!have_n) throw ParseError("edge list is missing the node-count header");
    return Graph(n, std::move(edges));
}

Graph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::json ? parse_graph_json(in) : parse_graph_edgelist(in);
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges()) {
        if (e.w == 1.0)
            edges.push_back({e.u, e.v});
        else
            edges.push_back({e.u, e.v, e.w});
    }
    return j.dump();
}

Matrix normalized_adjacency(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.n());
    Matrix atilde = Matrix::identity(n);
    for (const Edge& e : g.edges()) {
        atilde(e.u, e.v) += e.w;
        atilde(e.v, e.u) += e.w;
    }
    std::vector<double> dinv_sqrt(n);
    for (std::size_t i = 0; i < n; ++i) {
        double deg = 0.0;
        for (std::size_t j = 0; j < n; ++j) deg += atilde(i, j);
        dinv_sqrt[i] = 1.0 / std::sqrt(deg);  // deg >= 1 from the self-loop
    }
    Matrix ahat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ahat(i, j) = dinv_sqrt[i] * atilde(i, j) * dinv_sqrt[j];
    // Symmetrize: construction order can leave one-ulp asymmetry.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double s = 0.5 * (ahat(i, j) + ahat(j, i));
            ahat(i, j) = s;
            ahat(j, i) = s;
        }
    return ahat;
}

Graph permute_graph(const Graph& g, std::span<const int> perm) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        edges.push_back({perm[static_cast<std::size_t>(e.u)],
                         perm[static_cast<std::size_t>(e.v)], e.w});
    return Graph(g.n(), std::move(edges));
}

}  // namespace mapcanon
