#pragma once

#include <vector>

#include "mapcanon/axis_projection.hpp"
#include "mapcanon/linalg.hpp"
#include "mapcanon/spectral.hpp"

namespace mapcanon {

enum class BasisStatus {
    canonized,
    violated_k,     ///< fewer distinct axis-projection magnitudes than dimensions
    violated_perp,  ///< a summary vector was orthogonal to the remaining complement
};

/// Result of a basis canonization attempt on an eigenspace basis U (n x d).
/// On success `basis` holds the canonical orthonormal basis of span(U);
/// otherwise U is returned unchanged. `summary_indices` lists the 1-based
/// summary group chosen at each completed step, `failed_step` the 1-based
/// step at which a perpendicularity failure occurred.
struct BasisOutcome {
    Matrix basis;
    BasisStatus status = BasisStatus::canonized;
    int failed_step = 0;
    std::vector<int> summary_indices;
};

/// Canonical basis by sequential axis projection: at step i project summary
/// x_i onto the orthogonal complement of the already-chosen directions
/// inside span(U) and normalize. The projection is the unique maximizer of
/// u.x_i over unit vectors in that complement. Requires d >= 2 (single
/// vectors route to the sign canonizer) and orthonormal columns, else
/// DomainError.
BasisOutcome map_basis(const Matrix& u, const CanonConfig& cfg);

/// Variant that scans all summaries at every step and uses the first one
/// whose projection onto the current complement is nonzero. Succeeds on
/// some inputs where map_basis hits a perpendicularity failure and agrees
/// with it whenever map_basis succeeds.
BasisOutcome map_basis_strong(const Matrix& u, const CanonConfig& cfg);

}  // namespace mapcanon
