#include <doctest.h>

#include "mapcanon/verify.hpp"

using namespace mapcanon;

TEST_CASE("verify_sign: all counters reach total") {
    const SimulationReport r = verify_sign(200, 3, 20, 42, 1e-6);
    CHECK(r.total == 200);
    CHECK(r.p_correct == 200);
    CHECK(r.q_correct == 200);
    CHECK(r.pq_correct == 200);
    CHECK(r.all_passed());
    CHECK(r.max_deviation < 1e-8);  // observed headroom under eps
}

TEST_CASE("verify_sign: zero trials produce zero counters") {
    const SimulationReport r = verify_sign(0, 3, 20, 1, 1e-6);
    CHECK(r.total == 0);
    CHECK(r.p_correct == 0);
    CHECK(r.all_passed());
}

TEST_CASE("verify_sign: identical seeds reproduce identical reports") {
    const SimulationReport a = verify_sign(50, 3, 15, 7, 1e-6);
    const SimulationReport b = verify_sign(50, 3, 15, 7, 1e-6);
    CHECK(a.p_correct == b.p_correct);
    CHECK(a.max_deviation == b.max_deviation);
    // Sign canonization only negates or permutes entries, so agreeing runs
    // agree bit for bit: the measured headroom is exactly zero.
    CHECK(a.max_deviation == 0.0);
}

TEST_CASE("verify_sign: negative control fails the uniqueness counter") {
    // Pass-through canonizer that claims success without fixing a sign.
    const SignCanonizer broken = [](std::span<const double> u, const CanonConfig&) {
        SignOutcome o;
        o.vector.assign(u.begin(), u.end());
        o.canonized = true;
        return o;
    };
    const SimulationReport r = verify_sign(100, 3, 12, 5, 1e-6, {}, broken);
    CHECK(r.total == 100);
    CHECK(r.q_correct < r.total);
    CHECK_FALSE(r.all_passed());
}

TEST_CASE("verify_basis: all counters reach total with no regeneration") {
    const SimulationReport r = verify_basis(100, 3, 16, 7, 1e-6);
    CHECK(r.total == 100);
    CHECK(r.p_correct == 100);
    CHECK(r.q_correct == 100);
    CHECK(r.pq_correct == 100);
    CHECK(r.regenerated == 0);
    CHECK(r.max_deviation < 1e-7);
}

TEST_CASE("verify_basis: determinism") {
    const SimulationReport a = verify_basis(30, 3, 12, 9, 1e-6);
    const SimulationReport b = verify_basis(30, 3, 12, 9, 1e-6);
    CHECK(a.max_deviation == b.max_deviation);
    CHECK(a.total == b.total);
}
