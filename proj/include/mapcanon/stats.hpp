#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mapcanon/graph.hpp"
#include "mapcanon/pipeline.hpp"

namespace mapcanon {

/// Corpus-wide canonizability tallies. Eigenvalue counts are per eigenspace
/// (one entry per distinct eigenvalue under the grouping tolerance);
/// eigenvector counts are per column. Assumption-3 violations are counted
/// only among eigenspaces that already had enough distinct projection
/// magnitudes, so the two violation tallies are disjoint.
struct CorpusStats {
    long long graphs_total = 0;
    long long graphs_processed = 0;
    long long graphs_skipped_small = 0;
    long long graphs_failed = 0;

    long long eigenvectors_total = 0;
    long long sign_uncanonizable = 0;  ///< simple eigenvectors failing the sign scan
    long long hash_rescued = 0;        ///< subset later fixed by hash propagation

    long long eigenvalues_total = 0;
    long long multiple_eigenvalues = 0;
    long long violated_k_eigenvalues = 0;     ///< eigenspaces with k < d
    long long violated_perp_eigenvalues = 0;  ///< k >= d but a step degenerated
    long long basis_ambiguous_eigenvectors = 0;  ///< columns inside violated spaces

    double sign_ratio = 0.0;      ///< sign_uncanonizable / eigenvectors_total
    double multiple_ratio = 0.0;  ///< multiple_eigenvalues / eigenvalues_total
    double p1 = 0.0;              ///< violated_k / multiple_eigenvalues
    double p2 = 0.0;              ///< violated_perp / multiple_eigenvalues
    double p3 = 0.0;              ///< violated_k / eigenvalues_total
    double p4 = 0.0;              ///< violated_perp / eigenvalues_total
    double basis_ratio = 0.0;     ///< basis_ambiguous_eigenvectors / eigenvectors_total
    double total_ratio = 0.0;     ///< sign_ratio + basis_ratio
};

/// Runs the pipeline over every graph with n > min_nodes and tallies the
/// outcome statuses. Eigensolver failures count as skips, not aborts.
CorpusStats corpus_stats(std::span<const Graph> graphs, const PipelineOptions& opts,
                         int min_nodes = 5);

/// Training-free isomorphism discrimination over basis-ambiguous graphs:
/// every base graph must carry a 3-dimensional top eigenspace. Instances are
/// node permutations with an extra random rotation applied to that
/// eigenspace; each is classified by nearest sorted-row embedding against
/// the base references. With canonization the embedding is invariant to the
/// scramble, so canonized instances must classify perfectly; without it the
/// accuracy sits at chance level.
struct DiscriminationReport {
    int bases = 0;
    int instances = 0;
    int canonized_instances = 0;
    int violated_instances = 0;
    int correct_canonized = 0;
    int correct_total = 0;

    double accuracy_canonized() const {
        return canonized_instances ? static_cast<double>(correct_canonized) /
                                         canonized_instances
                                   : 0.0;
    }
    double accuracy_total() const {
        return instances ? static_cast<double>(correct_total) / instances : 0.0;
    }
};

DiscriminationReport isomorphism_discrimination_test(
    const std::vector<Graph>& bases, int instances_per_graph, std::uint64_t seed,
    bool with_canonization, const PipelineOptions& base_opts = {});

}  // namespace mapcanon
