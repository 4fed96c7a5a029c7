#include "mapcanon/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "mapcanon/errors.hpp"

namespace mapcanon {

std::string to_string(ColumnStatus s) {
    switch (s) {
        case ColumnStatus::canonized_sign: return "canonized-sign";
        case ColumnStatus::uncanonizable_sign: return "uncanonizable-sign";
        case ColumnStatus::hash_canonized_sign: return "hash-canonized-sign";
        case ColumnStatus::canonized_basis: return "canonized-basis";
        case ColumnStatus::violated_k: return "violated-k";
        case ColumnStatus::violated_perp: return "violated-perp";
        case ColumnStatus::raw: return "raw";
    }
    return "unknown";
}

CanonizedEmbedding canonize_spectrum(const Spectrum& spectrum,
                                     const PipelineOptions& opts) {
    opts.config.validate();
    const int n = spectrum.n();
    const int k = opts.config.k_pe.value_or(n);
    if (k < 1 || k > n) throw DomainError("k must be in [1, n]");

    // Eigenvectors live as contiguous rows of the transposed copy while the
    // per-vector passes run; the strided column walks of a row-major matrix
    // dominate the whole phase once n outgrows the cache.
    Matrix work = transpose(spectrum.vectors);
    std::vector<EmbeddingColumn> columns(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        columns[static_cast<std::size_t>(j)].eigenvalue = spectrum.eigenvalues[j];
    }
    for (std::size_t gi = 0; gi < spectrum.groups.size(); ++gi)
        for (int j = 0; j < spectrum.groups[gi].dim; ++j)
            columns[static_cast<std::size_t>(spectrum.groups[gi].start + j)]
                .eigenspace = static_cast<int>(gi);

    if (opts.canonize) {
        for (const EigenGroup& group : spectrum.groups) {
            const auto row = static_cast<std::size_t>(group.start);
            if (group.dim == 1) {
                const SignOutcome outcome =
                    opts.sign == SignMethod::map
                        ? map_sign(work.row(row), opts.config)
                        : polynomial_sign(work.row(row), opts.config);
                auto& meta = columns[row];
                if (outcome.canonized) {
                    for (int i = 0; i < n; ++i) work(row, i) = outcome.vector[i];
                    meta.status = ColumnStatus::canonized_sign;
                    meta.detail = outcome.h;
                } else {
                    meta.status = ColumnStatus::uncanonizable_sign;
                }
            } else {
                Matrix sub(static_cast<std::size_t>(n),
                           static_cast<std::size_t>(group.dim));
                for (int j = 0; j < group.dim; ++j)
                    for (int i = 0; i < n; ++i) sub(i, j) = work(row + j, i);
                const BasisOutcome outcome = opts.basis == BasisMethod::map
                                                 ? map_basis(sub, opts.config)
                                                 : map_basis_strong(sub, opts.config);
                ColumnStatus status = ColumnStatus::canonized_basis;
                if (outcome.status == BasisStatus::violated_k)
                    status = ColumnStatus::violated_k;
                else if (outcome.status == BasisStatus::violated_perp)
                    status = ColumnStatus::violated_perp;
                for (int j = 0; j < group.dim; ++j) {
                    auto& meta = columns[row + j];
                    meta.status = status;
                    if (outcome.status == BasisStatus::canonized) {
                        for (int i = 0; i < n; ++i)
                            work(row + j, i) = outcome.basis(i, j);
                        meta.detail = outcome.summary_indices[static_cast<std::size_t>(j)];
                    } else if (outcome.status == BasisStatus::violated_perp) {
                        meta.detail = outcome.failed_step;
                    }
                }
            }
        }

        if (opts.hash_propagate) {
            // Reference matrix: every sign-canonized column, kept in spectrum
            // order (descending eigenvalue, ties already deterministic).
            std::vector<int> canonized_cols, pending_cols;
            for (int j = 0; j < n; ++j) {
                const auto status = columns[static_cast<std::size_t>(j)].status;
                if (status == ColumnStatus::canonized_sign) canonized_cols.push_back(j);
                if (status == ColumnStatus::uncanonizable_sign) pending_cols.push_back(j);
            }
            if (!pending_cols.empty()) {
                Matrix reference(static_cast<std::size_t>(n), canonized_cols.size());
                for (std::size_t jj = 0; jj < canonized_cols.size(); ++jj)
                    for (int i = 0; i < n; ++i)
                        reference(i, jj) =
                            work(static_cast<std::size_t>(canonized_cols[jj]), i);
                std::vector<std::vector<double>> pending;
                pending.reserve(pending_cols.size());
                for (int j : pending_cols) {
                    const auto r = work.row(static_cast<std::size_t>(j));
                    pending.emplace_back(r.begin(), r.end());
                }
                const auto rescued =
                    hash_propagate_sign(pending, reference, opts.config);
                for (std::size_t t = 0; t < pending_cols.size(); ++t) {
                    if (!rescued[t].canonized) continue;
                    auto& meta = columns[static_cast<std::size_t>(pending_cols[t])];
                    for (int i = 0; i < n; ++i)
                        work(static_cast<std::size_t>(pending_cols[t]), i) =
                            rescued[t].vector[i];
                    meta.status = ColumnStatus::hash_canonized_sign;
                    meta.detail = rescued[t].h;
                }
            }
        }
    }

    CanonizedEmbedding out;
    out.n = n;
    out.k = k;
    out.values = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        double scale = 1.0;
        if (opts.reweight) {
            const double lambda = std::clamp(spectrum.eigenvalues[j], 0.0, 2.0);
            scale = std::sqrt(lambda);
        }
        for (int i = 0; i < n; ++i)
            out.values(i, j) = work(static_cast<std::size_t>(j), i) * scale;
    }
    out.columns.assign(columns.begin(), columns.begin() + k);
    return out;
}

CanonizedEmbedding canonize_graph(const Graph& g, const PipelineOptions& opts) {
    const Spectrum spectrum = eigendecompose(normalized_adjacency(g), opts.config);
    return canonize_spectrum(spectrum, opts);
}

}  // namespace mapcanon
