#pragma once

#include <span>
#include <vector>

#include "mapcanon/linalg.hpp"
#include "mapcanon/spectral.hpp"

namespace mapcanon {

/// Axes of R^n grouped by their projection length onto a subspace, in
/// descending length order, together with the per-group summary vectors
/// x_i = sum of the group's axes plus c times the all-ones vector.
///
/// Summaries are materialized on demand: the sign scan only ever needs
/// group-restricted sums, and building all k vectors eagerly would cost
/// O(n*k) per eigenvector.
struct AxisGrouping {
    std::vector<double> magnitudes;        ///< one per group, strictly descending
    std::vector<std::vector<int>> groups;  ///< axis indices, ascending within a group
    int n = 0;                             ///< ambient dimension
    double c = 0.0;                        ///< summary constant

    int k_groups() const { return static_cast<int>(groups.size()); }

    /// x_i for 0-based group index i.
    std::vector<double> summary(int i) const;

    std::vector<std::vector<double>> summaries() const;
};

/// Groups axis indices by magnitude with the same chained adjacent merging
/// used for eigenvalues: sort descending, split where the gap between
/// neighbours exceeds eps_group.
AxisGrouping group_magnitudes(std::span<const double> alpha, double eps_group,
                              double c);

/// Axis projection for a subspace given by orthonormal columns U (n x d).
/// The projection length of axis e_i onto span(U) equals the norm of row i
/// of U, so the n x n projector is never formed. Throws DomainError if the
/// columns are not orthonormal within 1e-8.
AxisGrouping project_axes(const Matrix& u, const CanonConfig& cfg);

}  // namespace mapcanon
