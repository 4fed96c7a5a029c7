#include "mapcanon/verify.hpp"

#include <cmath>
#include <vector>

#include "mapcanon/canon_basis.hpp"
#include "mapcanon/errors.hpp"
#include "mapcanon/rng.hpp"

namespace mapcanon {

namespace {

struct CanonizedColumns {
    Matrix values;
    std::vector<bool> canonized;
};

CanonizedColumns canonize_columns(const Matrix& m, const CanonConfig& cfg,
                                  const SignCanonizer& canonizer) {
    CanonizedColumns out{Matrix(m.rows(), m.cols()),
                         std::vector<bool>(m.cols(), false)};
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const SignOutcome o = canonizer(m.column(j), cfg);
        out.values.set_column(j, o.vector);
        out.canonized[j] = o.canonized;
    }
    return out;
}

/// Column-wise comparison that skips columns uncanonizable on both sides and
/// fails on any flag mismatch. Updates the headroom tracker on success.
bool columns_agree(const Matrix& expected, const std::vector<bool>& expected_flags,
                   const CanonizedColumns& actual, double eps, double& max_dev) {
    double worst = 0.0;
    for (std::size_t j = 0; j < expected.cols(); ++j) {
        if (expected_flags[j] != actual.canonized[j]) return false;
        if (!expected_flags[j]) continue;
        for (std::size_t i = 0; i < expected.rows(); ++i)
            worst = std::max(worst, std::abs(expected(i, j) - actual.values(i, j)));
    }
    if (worst >= eps) return false;
    max_dev = std::max(max_dev, worst);
    return true;
}

Matrix scale_columns(const Matrix& m, std::span<const double> s) {
    Matrix out = m;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) *= s[j];
    return out;
}

}  // namespace

SimulationReport verify_sign(long long trials, int n_min, int n_max,
                             std::uint64_t seed, double eps, const CanonConfig& cfg,
                             const SignCanonizer& canonizer) {
    if (n_min < 1 || n_max < n_min) throw DomainError("bad n range");
    const SignCanonizer canon =
        canonizer ? canonizer
                  : [](std::span<const double> u, const CanonConfig& c) {
                        return map_sign(u, c);
                    };
    SimulationReport report;
    report.seed = seed;
    report.eps = eps;
    for (long long t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        const int n = rng.uniform_int(n_min, n_max);
        const Matrix u = haar_orthonormal(n, n, rng);
        const std::vector<int> perm = rng.permutation(n);
        std::vector<double> signs(static_cast<std::size_t>(n));
        for (double& s : signs) s = rng.sign();

        const CanonizedColumns u0 = canonize_columns(u, cfg, canon);
        const Matrix expected = permute_rows(u0.values, perm);

        const CanonizedColumns v0 =
            canonize_columns(permute_rows(u, perm), cfg, canon);
        const CanonizedColumns w0 =
            canonize_columns(scale_columns(u, signs), cfg, canon);
        const CanonizedColumns y0 = canonize_columns(
            permute_rows(scale_columns(u, signs), perm), cfg, canon);

        if (columns_agree(expected, u0.canonized, v0, eps, report.max_deviation))
            ++report.p_correct;
        if (columns_agree(u0.values, u0.canonized, w0, eps, report.max_deviation))
            ++report.q_correct;
        if (columns_agree(expected, u0.canonized, y0, eps, report.max_deviation))
            ++report.pq_correct;
        ++report.total;
    }
    return report;
}

SimulationReport verify_basis(long long trials, int n_min, int n_max,
                              std::uint64_t seed, double eps,
                              const CanonConfig& cfg) {
    if (n_min < 3) n_min = 3;  // need 2 <= d < n
    if (n_max < n_min) throw DomainError("bad n range");
    SimulationReport report;
    report.seed = seed;
    report.eps = eps;
    const long long regen_budget = 100 * (trials > 0 ? trials : 1);
    long long produced = 0;
    std::uint64_t stream = 0;
    while (produced < trials) {
        if (report.regenerated > regen_budget)
            throw GeneratorError("basis simulation kept hitting assumption "
                                 "violations; check the sampler");
        Rng rng = Rng::for_trial(seed, stream++);
        const int n = rng.uniform_int(n_min, n_max);
        const int d = rng.uniform_int(2, n - 1);
        const Matrix u = haar_orthonormal(n, d, rng);
        const std::vector<int> perm = rng.permutation(n);
        const Matrix q = haar_orthonormal(d, d, rng);

        const BasisOutcome b_u = map_basis(u, cfg);
        const BasisOutcome b_pu = map_basis(permute_rows(u, perm), cfg);
        const BasisOutcome b_uq = map_basis(matmul(u, q), cfg);
        const BasisOutcome b_puq = map_basis(permute_rows(matmul(u, q), perm), cfg);
        if (b_u.status != BasisStatus::canonized ||
            b_pu.status != BasisStatus::canonized ||
            b_uq.status != BasisStatus::canonized ||
            b_puq.status != BasisStatus::canonized) {
            // Probability-zero event for Haar draws; regenerate and record.
            ++report.regenerated;
            continue;
        }

        const Matrix expected = permute_rows(b_u.basis, perm);
        const double p_dev = max_abs_diff(expected, b_pu.basis);
        const double q_dev = max_abs_diff(b_u.basis, b_uq.basis);
        const double pq_dev = max_abs_diff(expected, b_puq.basis);
        if (p_dev < eps) {
            ++report.p_correct;
            report.max_deviation = std::max(report.max_deviation, p_dev);
        }
        if (q_dev < eps) {
            ++report.q_correct;
            report.max_deviation = std::max(report.max_deviation, q_dev);
        }
        if (pq_dev < eps) {
            ++report.pq_correct;
            report.max_deviation = std::max(report.max_deviation, pq_dev);
        }
        ++report.total;
        ++produced;
    }
    return report;
}

}  // namespace mapcanon
