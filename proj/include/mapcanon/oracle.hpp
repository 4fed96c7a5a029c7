#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mapcanon/linalg.hpp"

namespace mapcanon {

/// Ground-truth canonizability verdict from permutation enumeration.
/// `witness`, present exactly when canonizable is false, holds a permutation
/// sigma (as the image list: position i maps to sigma[i]) realizing the
/// obstruction.
struct OracleVerdict {
    bool canonizable = true;
    std::optional<std::vector<int>> witness;
};

/// A vector is sign canonizable iff no permutation P gives u = -P u.
/// Enumerates all n! permutations with an entry-multiset pre-filter;
/// rejects n > 10 with SizeError.
OracleVerdict sign_canonizable_bruteforce(std::span<const double> u);

/// A basis U of eigenspace V is canonizable iff no permutation moves U
/// (||PU - U|| > 1e-9) while preserving its span (projector equality
/// ||P U U^T P^T - U U^T|| <= 1e-9). Rejects n > 8 with SizeError.
OracleVerdict basis_canonizable_bruteforce(const Matrix& u);

}  // namespace mapcanon
