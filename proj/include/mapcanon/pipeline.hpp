#pragma once

#include <string>
#include <vector>

#include "mapcanon/canon_basis.hpp"
#include "mapcanon/canon_sign.hpp"
#include "mapcanon/graph.hpp"
#include "mapcanon/spectral.hpp"

namespace mapcanon {

enum class ColumnStatus {
    canonized_sign,
    uncanonizable_sign,
    hash_canonized_sign,
    canonized_basis,
    violated_k,
    violated_perp,
    raw,  ///< canonization disabled (internal baseline mode, never serialized)
};

std::string to_string(ColumnStatus s);

struct EmbeddingColumn {
    double eigenvalue = 0.0;
    int eigenspace = 0;  ///< index of the eigenvalue group this column belongs to
    ColumnStatus status = ColumnStatus::raw;
    int detail = 0;  ///< summary group / odd power / failed step, when applicable
};

/// Canonized (reweighted) spectral embedding of one graph: k columns in
/// descending normalized-adjacency eigenvalue order, each carrying its
/// eigenvalue, eigenspace id and canonization status.
struct CanonizedEmbedding {
    int n = 0;
    int k = 0;
    Matrix values;  ///< n x k
    std::vector<EmbeddingColumn> columns;
};

enum class SignMethod { map, polynomial };
enum class BasisMethod { map, strong };

struct PipelineOptions {
    CanonConfig config;
    SignMethod sign = SignMethod::map;
    BasisMethod basis = BasisMethod::map;
    bool hash_propagate = false;  ///< second-chance hash pass for sign leftovers
    bool reweight = true;         ///< scale columns by sqrt(eigenvalue)
    bool canonize = true;         ///< false: raw eigenvectors (baseline mode)
};

/// Full pipeline: eigendecompose the normalized adjacency, canonize each
/// eigenspace (sign for multiplicity 1, basis otherwise), optionally run the
/// hash-propagation pass, reweight, truncate to k_pe columns.
CanonizedEmbedding canonize_graph(const Graph& g, const PipelineOptions& opts);

/// Same, starting from an existing spectrum (test seam and baseline mode).
CanonizedEmbedding canonize_spectrum(const Spectrum& spectrum,
                                     const PipelineOptions& opts);

}  // namespace mapcanon
