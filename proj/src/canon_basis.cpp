#include "mapcanon/canon_basis.hpp"

#include <cmath>

#include "mapcanon/errors.hpp"

namespace mapcanon {

namespace {

// All candidate directions live in span(U), so the search runs in the d
// coordinates relative to U's columns: dot products and norms agree with
// their R^n counterparts because the columns are orthonormal. Vectors are
// only mapped back through U once the basis is complete.
class CoefficientSolver {
public:
    CoefficientSolver(const Matrix& u, const AxisGrouping& grouping, double c)
        : u_(u), d_(u.cols()) {
        // Coordinates of each projected summary: U^T x_j accumulated from
        // the rows named by group j, plus c times the total row sum.
        std::vector<double> total(d_, 0.0);
        for (std::size_t r = 0; r < u.rows(); ++r)
            for (std::size_t t = 0; t < d_; ++t) total[t] += u(r, t);
        coef_.assign(grouping.groups.size(), std::vector<double>(d_, 0.0));
        for (std::size_t j = 0; j < grouping.groups.size(); ++j) {
            auto& row = coef_[j];
            for (int axis : grouping.groups[j])
                for (std::size_t t = 0; t < d_; ++t)
                    row[t] += u(static_cast<std::size_t>(axis), t);
            for (std::size_t t = 0; t < d_; ++t) row[t] += c * total[t];
        }
    }

    /// Residual of summary j against the accepted directions; empty when its
    /// norm is at or below eps_zero.
    std::vector<double> residual(std::size_t j, double eps_zero) const {
        std::vector<double> r = coef_[j];
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& a : accepted_) {
                const double proj = dot(r, a);
                for (std::size_t t = 0; t < d_; ++t) r[t] -= proj * a[t];
            }
        const double len = norm(r);
        if (len <= eps_zero) return {};
        for (double& v : r) v /= len;
        return r;
    }

    void accept(std::vector<double> direction) {
        accepted_.push_back(std::move(direction));
    }

    Matrix materialize() const {
        Matrix basis(u_.rows(), accepted_.size());
        for (std::size_t i = 0; i < u_.rows(); ++i)
            for (std::size_t j = 0; j < accepted_.size(); ++j) {
                double s = 0.0;
                for (std::size_t t = 0; t < d_; ++t) s += u_(i, t) * accepted_[j][t];
                basis(i, j) = s;
            }
        return basis;
    }

private:
    const Matrix& u_;
    std::size_t d_;
    std::vector<std::vector<double>> coef_;
    std::vector<std::vector<double>> accepted_;
};

BasisOutcome run_map_basis(const Matrix& u, const CanonConfig& cfg, bool strong) {
    if (u.cols() < 2)
        throw DomainError("basis canonizer expects d >= 2; route single vectors "
                          "to the sign canonizer");
    if (orthonormality_error(u) > 1e-8)
        throw DomainError("basis canonizer expects orthonormal columns");

    const AxisGrouping grouping = project_axes(u, cfg);
    const int d = static_cast<int>(u.cols());
    const int k = grouping.k_groups();

    BasisOutcome out;
    if (!strong && k < d) {
        out.basis = u;
        out.status = BasisStatus::violated_k;
        return out;
    }

    CoefficientSolver solver(u, grouping, cfg.c);
    for (int step = 0; step < d; ++step) {
        std::vector<double> direction;
        int used = -1;
        if (strong) {
            for (int j = 0; j < k; ++j) {
                direction = solver.residual(static_cast<std::size_t>(j), cfg.eps_zero);
                if (!direction.empty()) {
                    used = j;
                    break;
                }
            }
        } else {
            direction = solver.residual(static_cast<std::size_t>(step), cfg.eps_zero);
            used = step;
        }
        if (direction.empty()) {
            out.basis = u;
            out.status = BasisStatus::violated_perp;
            out.failed_step = step + 1;
            out.summary_indices.clear();
            return out;
        }
        solver.accept(std::move(direction));
        out.summary_indices.push_back(used + 1);
    }
    out.basis = solver.materialize();
    out.status = BasisStatus::canonized;
    return out;
}

}  // namespace

BasisOutcome map_basis(const Matrix& u, const CanonConfig& cfg) {
    return run_map_basis(u, cfg, false);
}

BasisOutcome map_basis_strong(const Matrix& u, const CanonConfig& cfg) {
    return run_map_basis(u, cfg, true);
}

}  // namespace mapcanon
