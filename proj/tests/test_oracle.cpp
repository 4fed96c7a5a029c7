#include <doctest.h>

#include <cmath>

#include "mapcanon/canon_basis.hpp"
#include "mapcanon/canon_sign.hpp"
#include "mapcanon/errors.hpp"
#include "mapcanon/oracle.hpp"
#include "mapcanon/rng.hpp"

using namespace mapcanon;

namespace {

std::vector<double> unit(std::vector<double> v) {
    const double s = norm(v);
    for (double& x : v) x /= s;
    return v;
}

std::vector<double> tie_rich(int n, Rng& rng) {
    std::vector<double> v(n);
    for (;;) {
        bool nonzero = false;
        for (double& x : v) {
            x = double(rng.uniform_int(-2, 2));
            nonzero |= x != 0.0;
        }
        if (nonzero) return unit(std::move(v));
    }
}

}  // namespace

TEST_CASE("sign oracle: worked verdicts") {
    const auto swap_pair = sign_canonizable_bruteforce(unit({1.0, -1.0}));
    REQUIRE_FALSE(swap_pair.canonizable);
    REQUIRE(swap_pair.witness.has_value());
    CHECK(*swap_pair.witness == std::vector<int>{1, 0});

    CHECK(sign_canonizable_bruteforce(unit({2.0, -1.0, -1.0})).canonizable);

    const auto anti = sign_canonizable_bruteforce(unit({1.0, 0.0, -1.0}));
    REQUIRE_FALSE(anti.canonizable);
    // The witness must reproduce the obstruction u = -Pu.
    const auto u = unit({1.0, 0.0, -1.0});
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(u[i] + u[(*anti.witness)[i]]) <= 1e-9);
}

TEST_CASE("sign oracle: size limit") {
    CHECK_THROWS_AS(sign_canonizable_bruteforce(std::vector<double>(11, 0.3)),
                    SizeError);
}

TEST_CASE("basis oracle: coordinate plane obstruction") {
    Matrix u(3, 2);
    u(0, 0) = 1.0;
    u(1, 1) = 1.0;
    const auto verdict = basis_canonizable_bruteforce(u);
    REQUIRE_FALSE(verdict.canonizable);
    REQUIRE(verdict.witness.has_value());
    // Swapping nodes 0 and 1 preserves the span but moves U.
    CHECK((*verdict.witness)[2] == 2);

    // Replaying the witness reproduces the obstruction: PU != U, same span.
    const auto& sigma = *verdict.witness;
    Matrix pu(3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) pu(i, j) = u(sigma[i], j);
    CHECK(frobenius_diff(pu, u) > 1e-9);
    CHECK(frobenius_diff(matmul(pu, transpose(pu)), matmul(u, transpose(u))) <= 1e-9);
}

TEST_CASE("basis oracle: random continuous subspaces are canonizable") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const Matrix u = haar_orthonormal(4, 2, rng);
        CHECK(basis_canonizable_bruteforce(u).canonizable);
    }
}

TEST_CASE("basis oracle: the full space is never canonizable") {
    Rng rng(12);
    for (int n = 2; n <= 4; ++n) {
        const Matrix u = haar_orthonormal(n, n, rng);
        CHECK_FALSE(basis_canonizable_bruteforce(u).canonizable);
    }
    Matrix big(9, 2);
    CHECK_THROWS_AS(basis_canonizable_bruteforce(big), SizeError);
}

TEST_CASE("map_sign agrees with the sign oracle on tie-rich vectors") {
    Rng rng(2718);
    const CanonConfig cfg;
    int uncanonizable = 0;
    for (int t = 0; t < 1000; ++t) {
        const int n = rng.uniform_int(2, 8);
        const auto u = tie_rich(n, rng);
        const bool fast = map_sign(u, cfg).canonized;
        const bool truth = sign_canonizable_bruteforce(u).canonizable;
        CHECK(fast == truth);
        uncanonizable += !truth;
    }
    CHECK(uncanonizable > 0);
}

TEST_CASE("map_basis success implies oracle canonizability") {
    Rng rng(3141);
    const CanonConfig cfg;
    int succeeded = 0;
    for (int t = 0; t < 60; ++t) {
        const int n = rng.uniform_int(3, 7);
        const int d = rng.uniform_int(2, n - 1);
        const Matrix u = haar_orthonormal(n, d, rng);
        if (map_basis(u, cfg).status != BasisStatus::canonized) continue;
        CHECK(basis_canonizable_bruteforce(u).canonizable);
        ++succeeded;
    }
    CHECK(succeeded > 0);
}
