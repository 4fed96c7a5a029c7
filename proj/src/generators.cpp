#include "mapcanon/generators.hpp"

#include <algorithm>
#include <string>

#include "mapcanon/errors.hpp"
#include "mapcanon/rng.hpp"
#include "mapcanon/spectral.hpp"

namespace mapcanon {

std::vector<Graph> gen_er(int n, double p, bool weighted, int count,
                          std::uint64_t seed) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw DomainError("p must be in (0, 1)");
    std::vector<Graph> graphs;
    graphs.reserve(static_cast<std::size_t>(count));
    for (int g = 0; g < count; ++g) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(g));
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.uniform01() < p)
                    edges.push_back({i, j, weighted ? 1.0 - rng.uniform01() : 1.0});
        graphs.emplace_back(n, std::move(edges));
    }
    return graphs;
}

namespace {

/// Connected random weighted component on nodes [base, base+size): a random
/// spanning tree plus extra edges, weights uniform in (0.05, 1].
void add_component(std::vector<Edge>& edges, int base, int size, Rng& rng) {
    std::vector<std::vector<bool>> used(size, std::vector<bool>(size, false));
    for (int i = 1; i < size; ++i) {
        const int parent = rng.uniform_int(0, i - 1);
        used[parent][i] = true;
        edges.push_back({base + parent, base + i, rng.uniform(0.05, 1.0)});
    }
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            if (used[i][j]) continue;
            if (rng.uniform01() < 0.3)
                edges.push_back({base + i, base + j, rng.uniform(0.05, 1.0)});
        }
}

}  // namespace

Graph gen_basis_ambiguous(std::uint64_t seed, std::uint64_t index) {
    constexpr int kRetries = 64;
    // Equal component sizes keep the axis-projection ranking from being
    // monopolized by the smallest component (per-component projection mass
    // is 1 regardless of size), and a fixed node count keeps embeddings of
    // different graphs comparable.
    constexpr int kComponent = 6;
    constexpr int kNodes = 3 * kComponent;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        Rng rng = Rng::for_trial(seed ^ 0xB4515A3Bu,
                                 index * kRetries + static_cast<std::uint64_t>(attempt));
        const int n = kNodes;
        std::vector<Edge> edges;
        int base = 0;
        for (int c = 0; c < 3; ++c) {
            const std::size_t first = edges.size();
            add_component(edges, base, kComponent, rng);
            // Soft hub: boosting one node's incident weights often lifts one
            // axis from each component into the leading projection groups,
            // which is what makes some of these eigenspaces canonizable.
            const int hub = base + rng.uniform_int(0, kComponent - 1);
            const double boost = rng.uniform(2.0, 4.0);
            for (std::size_t e = first; e < edges.size(); ++e)
                if (edges[e].u == hub || edges[e].v == hub) edges[e].w *= boost;
            base += kComponent;
        }
        // Scatter the component structure across node labels.
        const std::vector<int> relabel = rng.permutation(n);
        Graph g = permute_graph(Graph(n, std::move(edges)), relabel);

        // Postcondition check: the leading eigenspace must have dimension 3
        // and a clear gap to the rest of the spectrum.
        CanonConfig cfg;
        const Spectrum s = eigendecompose(normalized_adjacency(g), cfg);
        if (s.groups.front().dim == 3 &&
            s.eigenvalues[2] - s.eigenvalues[3] > 100 * cfg.eps_eig)
            return g;
    }
    throw GeneratorError("could not realize a 3-dimensional top eigenspace after " +
                         std::to_string(kRetries) + " attempts");
}

std::vector<Graph> gen_basis_ambiguous_set(int count, std::uint64_t seed) {
    std::vector<Graph> graphs;
    graphs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        graphs.push_back(gen_basis_ambiguous(seed, static_cast<std::uint64_t>(i)));
    return graphs;
}

}  // namespace mapcanon
