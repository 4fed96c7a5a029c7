#include <doctest.h>

#include <cmath>

#include "mapcanon/canon_basis.hpp"
#include "mapcanon/errors.hpp"
#include "mapcanon/rng.hpp"

using namespace mapcanon;

namespace {

Matrix column_matrix(const std::vector<std::vector<double>>& cols) {
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

/// Orthonormal basis of the plane orthogonal to (1,1,1) in R^3: all three
/// axis projections are equal, so only one summary group exists.
Matrix symmetric_plane() {
    const double a = 1.0 / std::sqrt(2.0);
    const double b = 1.0 / std::sqrt(6.0);
    return column_matrix({{a, -a, 0.0}, {b, b, -2.0 * b}});
}

}  // namespace

TEST_CASE("map_basis: distinct axis angles give the expected unique basis") {
    const double r = 1.0 / std::sqrt(2.0);
    const Matrix u = column_matrix({{1, 0, 0}, {0, r, r}});
    const BasisOutcome out = map_basis(u, {});
    REQUIRE(out.status == BasisStatus::canonized);
    CHECK(out.basis(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(out.basis(1, 0) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    CHECK(out.basis(1, 1) == doctest::Approx(r).epsilon(1e-12));
    CHECK(out.basis(2, 1) == doctest::Approx(r).epsilon(1e-12));
    CHECK(out.summary_indices == std::vector<int>{1, 2});

    // Any rotated basis of the same plane lands on the same output.
    Rng rng(5);
    const Matrix q = haar_orthonormal(2, 2, rng);
    const BasisOutcome rotated = map_basis(matmul(u, q), {});
    REQUIRE(rotated.status == BasisStatus::canonized);
    CHECK(max_abs_diff(rotated.basis, out.basis) < 1e-10);
}

TEST_CASE("map_basis: coordinate plane hits a perpendicular summary") {
    const Matrix u = column_matrix({{1, 0, 0}, {0, 1, 0}});
    const BasisOutcome out = map_basis(u, {});
    REQUIRE(out.status == BasisStatus::violated_perp);
    CHECK(out.failed_step == 2);
    CHECK(out.basis == u);  // input returned untouched
}

TEST_CASE("map_basis: fully symmetric plane has too few groups") {
    const BasisOutcome out = map_basis(symmetric_plane(), {});
    CHECK(out.status == BasisStatus::violated_k);
}

TEST_CASE("map_basis: d=1 and non-orthonormal inputs are rejected") {
    CHECK_THROWS_AS(map_basis(column_matrix({{1, 0, 0}}), {}), DomainError);
    Matrix bad(3, 2);
    bad(0, 0) = 1.0;
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(map_basis(bad, {}), DomainError);
}

TEST_CASE("map_basis: per-step maximizer is optimal over the feasible sphere") {
    Rng rng(17);
    const Matrix u = haar_orthonormal(7, 3, rng);
    const BasisOutcome out = map_basis(u, {});
    REQUIRE(out.status == BasisStatus::canonized);
    const AxisGrouping grouping = project_axes(u, {});

    for (int step = 0; step < 3; ++step) {
        const std::vector<double> x = grouping.summary(step);
        const std::vector<double> u_i = out.basis.column(step);
        const double achieved = dot(u_i, x);
        CHECK(achieved > 0.0);
        for (int probe = 0; probe < 100; ++probe) {
            // Random unit vector in span(U) orthogonal to the earlier picks.
            std::vector<double> v(7, 0.0);
            for (int c = 0; c < 3; ++c) {
                const double w = rng.gaussian();
                for (int i = 0; i < 7; ++i) v[i] += w * u(i, c);
            }
            for (int pass = 0; pass < 2; ++pass)
                for (int prev = 0; prev < step; ++prev) {
                    const std::vector<double> p = out.basis.column(prev);
                    const double proj = dot(v, p);
                    for (int i = 0; i < 7; ++i) v[i] -= proj * p[i];
                }
            const double len = norm(v);
            if (len < 1e-9) continue;
            for (double& e : v) e /= len;
            CHECK(dot(v, x) <= achieved + 1e-9);
        }
    }
    CHECK(orthonormality_error(out.basis) <= 1e-8);
}

TEST_CASE("map_basis_strong matches map_basis whenever the latter succeeds") {
    Rng rng(23);
    int compared = 0;
    while (compared < 40) {
        const int n = rng.uniform_int(4, 10);
        const int d = rng.uniform_int(2, n - 1);
        const Matrix u = haar_orthonormal(n, d, rng);
        const BasisOutcome plain = map_basis(u, {});
        if (plain.status != BasisStatus::canonized) continue;
        const BasisOutcome strong = map_basis_strong(u, {});
        REQUIRE(strong.status == BasisStatus::canonized);
        CHECK(max_abs_diff(strong.basis, plain.basis) < 1e-10);
        CHECK(strong.summary_indices == plain.summary_indices);
        ++compared;
    }
}

TEST_CASE("map_basis_strong rescues a perpendicularity failure") {
    // Plane in R^4 with axis groups {2,3} > {0} > {1}. The first summary
    // e2+e3 selects the first column; the second summary e0 is orthogonal to
    // the remaining complement (the second column), so the plain scan dies
    // at step 2, while the third summary e1 still reaches the complement.
    const Matrix u = column_matrix({
        {std::sqrt(0.4), 0.0, std::sqrt(0.3), std::sqrt(0.3)},
        {0.0, std::sqrt(0.1), std::sqrt(0.45), -std::sqrt(0.45)},
    });
    const BasisOutcome plain = map_basis(u, {});
    REQUIRE(plain.status == BasisStatus::violated_perp);
    CHECK(plain.failed_step == 2);

    const BasisOutcome strong = map_basis_strong(u, {});
    REQUIRE(strong.status == BasisStatus::canonized);
    CHECK(strong.summary_indices == std::vector<int>{1, 3});
    CHECK(orthonormality_error(strong.basis) <= 1e-8);

    // The rescue stays basis-invariant and permutation-equivariant.
    Rng rng(4);
    const Matrix q = haar_orthonormal(2, 2, rng);
    const BasisOutcome rotated = map_basis_strong(matmul(u, q), {});
    REQUIRE(rotated.status == BasisStatus::canonized);
    CHECK(max_abs_diff(rotated.basis, strong.basis) < 1e-9);

    const std::vector<int> perm = rng.permutation(4);
    const BasisOutcome moved = map_basis_strong(permute_rows(u, perm), {});
    REQUIRE(moved.status == BasisStatus::canonized);
    CHECK(max_abs_diff(moved.basis, permute_rows(strong.basis, perm)) < 1e-9);
}

TEST_CASE("map_basis_strong still fails on the fully symmetric plane") {
    const BasisOutcome out = map_basis_strong(symmetric_plane(), {});
    CHECK(out.status == BasisStatus::violated_perp);
}

TEST_CASE("map_basis preserves the span of its input") {
    Rng rng(47);
    int done = 0;
    while (done < 20) {
        const int n = rng.uniform_int(4, 10);
        const int d = rng.uniform_int(2, n - 1);
        const Matrix u = haar_orthonormal(n, d, rng);
        const BasisOutcome out = map_basis(u, {});
        if (out.status != BasisStatus::canonized) continue;
        const Matrix before = matmul(u, transpose(u));
        const Matrix after = matmul(out.basis, transpose(out.basis));
        CHECK(frobenius_diff(before, after) <= 1e-7);
        ++done;
    }
}

TEST_CASE("basis invariance and permutation equivariance on random subspaces") {
    Rng rng(13);
    const CanonConfig cfg;
    int done = 0;
    while (done < 60) {
        const int n = rng.uniform_int(4, 12);
        const int d = rng.uniform_int(2, n - 1);
        const Matrix u = haar_orthonormal(n, d, rng);
        const BasisOutcome base = map_basis(u, cfg);
        if (base.status != BasisStatus::canonized) continue;

        const Matrix q = haar_orthonormal(d, d, rng);
        const std::vector<int> perm = rng.permutation(n);

        const BasisOutcome rotated = map_basis(matmul(u, q), cfg);
        REQUIRE(rotated.status == BasisStatus::canonized);
        CHECK(max_abs_diff(rotated.basis, base.basis) < 1e-7);

        const BasisOutcome moved = map_basis(permute_rows(u, perm), cfg);
        REQUIRE(moved.status == BasisStatus::canonized);
        CHECK(max_abs_diff(moved.basis, permute_rows(base.basis, perm)) < 1e-7);

        const BasisOutcome both = map_basis(permute_rows(matmul(u, q), perm), cfg);
        REQUIRE(both.status == BasisStatus::canonized);
        CHECK(max_abs_diff(both.basis, permute_rows(base.basis, perm)) < 1e-7);
        ++done;
    }
}
