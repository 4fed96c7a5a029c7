#include "mapcanon/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mapcanon/errors.hpp"
#include "mapcanon/rng.hpp"

namespace mapcanon {

CorpusStats corpus_stats(std::span<const Graph> graphs, const PipelineOptions& opts,
                         int min_nodes) {
    CorpusStats s;
    PipelineOptions run = opts;
    run.config.k_pe.reset();  // statuses are needed for every column
    for (const Graph& g : graphs) {
        ++s.graphs_total;
        if (g.n() <= min_nodes) {
            ++s.graphs_skipped_small;
            continue;
        }
        CanonizedEmbedding emb;
        try {
            emb = canonize_graph(g, run);
        } catch (const ConvergenceError&) {
            ++s.graphs_failed;
            continue;
        }
        ++s.graphs_processed;
        s.eigenvectors_total += emb.n;
        int prev_space = -1;
        for (const EmbeddingColumn& col : emb.columns) {
            switch (col.status) {
                case ColumnStatus::uncanonizable_sign:
                    ++s.sign_uncanonizable;
                    break;
                case ColumnStatus::hash_canonized_sign:
                    ++s.sign_uncanonizable;  // assumption still failed pre-rescue
                    ++s.hash_rescued;
                    break;
                case ColumnStatus::violated_k:
                case ColumnStatus::violated_perp:
                    ++s.basis_ambiguous_eigenvectors;
                    break;
                default:
                    break;
            }
            if (col.eigenspace == prev_space) continue;
            prev_space = col.eigenspace;
            ++s.eigenvalues_total;
            const bool multiple = col.status == ColumnStatus::canonized_basis ||
                                  col.status == ColumnStatus::violated_k ||
                                  col.status == ColumnStatus::violated_perp;
            if (multiple) {
                ++s.multiple_eigenvalues;
                if (col.status == ColumnStatus::violated_k)
                    ++s.violated_k_eigenvalues;
                else if (col.status == ColumnStatus::violated_perp)
                    ++s.violated_perp_eigenvalues;
            }
        }
    }
    const auto ratio = [](long long num, long long den) {
        return den ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
    };
    s.sign_ratio = ratio(s.sign_uncanonizable, s.eigenvectors_total);
    s.multiple_ratio = ratio(s.multiple_eigenvalues, s.eigenvalues_total);
    s.p1 = ratio(s.violated_k_eigenvalues, s.multiple_eigenvalues);
    s.p2 = ratio(s.violated_perp_eigenvalues, s.multiple_eigenvalues);
    s.p3 = ratio(s.violated_k_eigenvalues, s.eigenvalues_total);
    s.p4 = ratio(s.violated_perp_eigenvalues, s.eigenvalues_total);
    s.basis_ratio = ratio(s.basis_ambiguous_eigenvectors, s.eigenvectors_total);
    s.total_ratio = s.sign_ratio + s.basis_ratio;
    return s;
}

namespace {

/// Rows sorted lexicographically on nanoscale-quantized keys: a
/// permutation-invariant fingerprint of the embedding, compared by
/// Frobenius distance. Quantizing before sorting keeps rows whose leading
/// entries differ only by eigensolver round-off (for instance exact zeros
/// off a component's support) from being ordered by that noise.
Matrix sorted_rows(const Matrix& m) {
    std::vector<std::size_t> order(m.rows());
    std::vector<std::vector<long long>> keys(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        order[i] = i;
        keys[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            keys[i][j] = std::llround(m(i, j) * 1e9);
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(order[i], j);
    return out;
}

struct PreparedInstance {
    Matrix fingerprint;
    bool canonized = false;
};

/// Embedding of the graph's 3-dimensional top eigenspace, with an optional
/// explicit basis scramble applied before canonization.
PreparedInstance embed_top_eigenspace(const Graph& g, const PipelineOptions& opts,
                                      const Matrix* rotation) {
    PipelineOptions run = opts;
    run.config.k_pe = 3;
    Spectrum s = eigendecompose(normalized_adjacency(g), run.config);
    if (s.groups.front().dim != 3)
        throw DomainError("discrimination test expects a 3-dimensional top "
                          "eigenspace");
    if (rotation) {
        const Matrix rotated = matmul(s.vectors.columns(0, 3), *rotation);
        for (std::size_t j = 0; j < 3; ++j)
            s.vectors.set_column(j, rotated.column(j));
    }
    const CanonizedEmbedding emb = canonize_spectrum(s, run);
    PreparedInstance out;
    out.fingerprint = sorted_rows(emb.values);
    out.canonized = true;
    for (const EmbeddingColumn& col : emb.columns)
        out.canonized &= col.status == ColumnStatus::canonized_basis;
    return out;
}

}  // namespace

DiscriminationReport isomorphism_discrimination_test(
    const std::vector<Graph>& bases, int instances_per_graph, std::uint64_t seed,
    bool with_canonization, const PipelineOptions& base_opts) {
    PipelineOptions opts = base_opts;
    opts.canonize = with_canonization;

    DiscriminationReport report;
    report.bases = static_cast<int>(bases.size());

    std::vector<PreparedInstance> references;
    references.reserve(bases.size());
    for (const Graph& g : bases)
        references.push_back(embed_top_eigenspace(g, opts, nullptr));

    const auto rows = static_cast<std::size_t>(instances_per_graph);
    for (std::size_t b = 0; b < bases.size(); ++b) {
        for (std::size_t inst = 0; inst < rows; ++inst) {
            Rng rng = Rng::for_trial(seed, b * rows + inst);
            const std::vector<int> perm = rng.permutation(bases[b].n());
            const Matrix q = haar_orthonormal(3, 3, rng);
            const Graph shuffled = permute_graph(bases[b], perm);
            const PreparedInstance instance =
                embed_top_eigenspace(shuffled, opts, &q);

            std::size_t best = 0;
            double best_dist = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < references.size(); ++r) {
                if (references[r].fingerprint.rows() != instance.fingerprint.rows())
                    continue;  // different node counts cannot match
                const double dist =
                    frobenius_diff(references[r].fingerprint, instance.fingerprint);
                if (dist < best_dist) {
                    best_dist = dist;
                    best = r;
                }
            }
            const bool correct = best == b;
            ++report.instances;
            report.correct_total += correct;
            if (with_canonization) {
                if (instance.canonized) {
                    ++report.canonized_instances;
                    report.correct_canonized += correct;
                } else {
                    ++report.violated_instances;
                }
            }
        }
    }
    return report;
}

}  // namespace mapcanon
