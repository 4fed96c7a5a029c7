#include "mapcanon/rng.hpp"

#include <cmath>

namespace mapcanon {

Matrix haar_orthonormal(int n, int d, Rng& rng) {
    Matrix q(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) q(i, j) = rng.gaussian();

    std::vector<double> col(static_cast<std::size_t>(n));
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < n; ++i) col[i] = q(i, j);
        // Two orthogonalization passes keep U^T U near machine epsilon.
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                double proj = 0.0;
                for (int i = 0; i < n; ++i) proj += q(i, k) * col[i];
                for (int i = 0; i < n; ++i) col[i] -= proj * q(i, k);
            }
        }
        double nrm = 0.0;
        for (int i = 0; i < n; ++i) nrm += col[i] * col[i];
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) {
            // Degenerate draw (astronomically unlikely); retry this column.
            for (int i = 0; i < n; ++i) q(i, j) = rng.gaussian();
            --j;
            continue;
        }
        for (int i = 0; i < n; ++i) q(i, j) = col[i] / nrm;
    }
    return q;
}

}  // namespace mapcanon
