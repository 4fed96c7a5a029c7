#pragma once

#include <span>
#include <vector>

#include "mapcanon/axis_projection.hpp"
#include "mapcanon/linalg.hpp"
#include "mapcanon/spectral.hpp"

namespace mapcanon {

enum class SignAlgorithm { map_sign, polynomial, hash_propagated };

/// Result of a sign canonization attempt. When `canonized`, `vector` is the
/// canonical representative of {u, -u}; otherwise the input is returned
/// exactly as received. `h` is the 1-based summary-group index that decided
/// the sign (map/hash variants) or the odd power used (polynomial variant).
struct SignOutcome {
    std::vector<double> vector;
    bool canonized = false;
    int h = 0;
    SignAlgorithm algorithm = SignAlgorithm::map_sign;
};

/// Maximal-axis-projection sign canonizer: group the axes by |u_i|, scan the
/// summary vectors in descending magnitude order, and at the first one with
/// |u.x_h| > eps_zero pick the sign that makes the product positive. Returns
/// uncanonized if u is orthogonal to every summary, which happens exactly
/// when u and -u are permutations of each other. Throws DomainError when
/// the input norm deviates from 1 by more than 1e-6.
SignOutcome map_sign(std::span<const double> u, const CanonConfig& cfg);

/// Odd-power-sum canonizer: find the smallest odd h <= n with
/// |sum_i u_i^h| > eps_zero and flip so the sum is positive. Canonizes the
/// same vectors as map_sign; the chosen representatives may differ.
SignOutcome polynomial_sign(std::span<const double> u, const CanonConfig& cfg);

/// Second-chance pass for vectors map_sign could not canonize: hash the rows
/// of the already-canonized column matrix into a reference vector, group the
/// axes by those hash values, and rerun the sign scan against the resulting
/// summaries. Rows hash via FNV-1a over the entries quantized to
/// cfg.hash_digits decimal digits, so equal rows collide and permuted rows
/// travel with their nodes. Vectors orthogonal to every hash-derived
/// summary stay uncanonized.
std::vector<SignOutcome> hash_propagate_sign(
    const std::vector<std::vector<double>>& uncanonized, const Matrix& canonized,
    const CanonConfig& cfg);

/// Row fingerprints in [0, 1) used by hash_propagate_sign; exposed for tests.
std::vector<double> hash_rows(const Matrix& m, int digits);

}  // namespace mapcanon
