#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mapcanon/linalg.hpp"

namespace mapcanon {

/// Tolerances and knobs shared across the canonization pipeline.
struct CanonConfig {
    double eps_eig = 1e-6;    ///< eigenvalue grouping tolerance
    double eps_zero = 1e-6;   ///< zero-projection / orthogonality threshold
    double eps_group = 1e-6;  ///< axis-projection magnitude grouping tolerance
    double c = 0.0;           ///< summary-vector all-ones constant
    std::optional<int> k_pe;  ///< embedding columns kept (default: all)
    int hash_digits = 6;      ///< quantization digits for row hashing

    void validate() const;  ///< throws DomainError on nonpositive tolerances
};

/// One eigenspace: a contiguous run of columns in the sorted spectrum.
struct EigenGroup {
    int start = 0;  ///< first column index
    int dim = 0;    ///< multiplicity
};

/// Eigendecomposition of the normalized adjacency, eigenvalues sorted
/// descending (ascending Laplacian frequency), columns of `vectors` paired
/// with `eigenvalues`, and eigenspaces grouped under eps_eig.
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix vectors;
    std::vector<EigenGroup> groups;

    int n() const { return static_cast<int>(eigenvalues.size()); }
};

/// Decomposes a symmetric matrix whose spectrum lies in [0, 2], i.e. a
/// normalized adjacency. Householder tridiagonalization followed by
/// implicitly shifted QL; deterministic for a fixed input. Throws
/// ConvergenceError if the sweep budget (30 per eigenvalue) is exhausted
/// and DomainError if an eigenvalue escapes [-eps_eig, 2+eps_eig].
Spectrum eigendecompose(const Matrix& adj, const CanonConfig& cfg);

/// Raw symmetric eigensolver (ascending eigenvalues, no range check).
/// Exposed for verification harnesses that decompose arbitrary matrices.
void symmetric_eigen(const Matrix& a, std::vector<double>& values, Matrix& vectors);

/// Chained adjacent merging of a descending-sorted eigenvalue sequence:
/// a group ends where the gap between neighbours exceeds eps_eig. Returns
/// (start, dim) runs covering all indices exactly once.
std::vector<EigenGroup> group_eigenspaces(std::span<const double> descending,
                                          double eps_eig);

/// Reweighted spectral embedding: column i is vectors[:,i] * sqrt(lambda_i),
/// truncated to the first k_pe columns. Round-off eigenvalues are clamped
/// into [0, 2] before the square root.
Matrix rse(const Spectrum& spectrum, const CanonConfig& cfg);

}  // namespace mapcanon
