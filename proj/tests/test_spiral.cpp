#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spirallog/error.hpp"
#include "spirallog/spiral.hpp"

using namespace spirallog;
using oracle::C;

TEST_CASE("params validate lambda")
{
    CHECK_THROWS_AS(SpiralParams(0.0), Error);
    CHECK_THROWS_AS(SpiralParams(1.5), Error);
    CHECK_THROWS_AS(SpiralParams(NAN), Error);
    const SpiralParams p(0.6);
    CHECK(p.vertex() == doctest::Approx(std::pow(2.0, 0.6)));
    CHECK(p.max_argument() == doctest::Approx(0.3 * M_PI));
}

TEST_CASE("q_eval")
{
    CHECK(q_eval(SpiralParams(0.6), 0.0) == C(1));
    CHECK(std::abs(q_eval(SpiralParams(1.0), C(0, 0.5)) - C(1, 0.5)) < 1e-15);
    CHECK(std::abs(q_eval(SpiralParams(0.5), 0.5) - std::sqrt(1.5)) < 1e-15);
    CHECK(std::abs(q_eval(SpiralParams(0.5), 0.5) - 1.22474487) < 1e-8);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const C z = oracle::random_point(rng, 0.99);
        CHECK(std::abs(q_eval(SpiralParams(0.3), z) - oracle::cpow(1.0 + z, 0.3)) < 1e-14);
    }
    try {
        (void)q_eval(SpiralParams(0.5), 1.0);
        FAIL("expected OutsideDisk");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::OutsideDisk);
    }
    CHECK_THROWS_AS(q_eval(SpiralParams(0.5), C(0, -1.2)), Error);
}

TEST_CASE("q_series matches q_eval inside the disk")
{
    const SpiralParams p(0.4);
    const auto s = q_series(p, 200);
    for (const C z : {C(0.3, 0.2), C(-0.5, 0.1), C(0, 0.6)})
        CHECK(std::abs(evaluate(s, z) - q_eval(p, z)) < 1e-12);
}

TEST_CASE("boundary points")
{
    const SpiralParams p(0.6);
    const auto pts = boundary_points(p, 1001);
    REQUIRE(pts.size() == 1001);
    CHECK(pts.front().rho == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(std::abs(pts.back().rho) < 1e-6);
    CHECK(pts.front().phi == doctest::Approx(-0.3 * M_PI));
    CHECK(pts.back().phi == doctest::Approx(0.3 * M_PI));
    CHECK(pts[500].phi == 0.0);
    CHECK(std::abs(pts[500].rho - std::pow(2.0, 0.6)) < 1e-15);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].phi == -pts[pts.size() - 1 - i].phi);
        CHECK(pts[i].rho == pts[pts.size() - 1 - i].rho);
        CHECK(std::abs(pts[i].rho - std::pow(2.0 * std::cos(pts[i].phi / 0.6), 0.6)) < 1e-12);
    }

    // lambda = 1: the circle |w - 1| = 1
    for (const auto &b : boundary_points(SpiralParams(1.0), 101))
        CHECK(std::abs(std::abs(b.w() - 1.0) - 1.0) < 1e-12);

    CHECK_THROWS_AS(boundary_points(p, 1), Error);
}

TEST_CASE("contains")
{
    for (const double lam : {0.25, 0.6, 1.0}) {
        const SpiralParams p(lam);
        CHECK(contains(p, 1.0, 0.0));
        CHECK_FALSE(contains(p, -0.1, 0.0));
        CHECK_FALSE(contains(p, p.vertex(), 0.0));
        CHECK_FALSE(contains(p, 0.0, 0.0));
        CHECK(contains(p, 0.999 * p.vertex(), 0.0));
        CHECK_FALSE(contains(p, 1.001 * p.vertex(), 0.0));
        CHECK(contains(p, 1.001 * p.vertex(), 0.01));
    }
}

TEST_CASE("q maps the disk into the spiral region")
{
    std::mt19937_64 rng(17);
    for (const double lam : {0.25, 0.5, 0.75, 1.0}) {
        const SpiralParams p(lam);
        double max_arg = 0;
        for (int i = 0; i < 500; ++i) {
            const C w = q_eval(p, oracle::random_point(rng, 0.95));
            CHECK(contains(p, w, 0.0));
            max_arg = std::max(max_arg, std::abs(std::arg(w)));
        }
        CHECK(max_arg <= p.max_argument() + 1e-9);
    }
}

TEST_CASE("spiral regions are nested in lambda")
{
    for (const int n : {1, 2, 3}) {
        const SpiralParams outer(1.0 / n);
        const SpiralParams inner(1.0 / (n + 1));
        const auto pts = boundary_points(inner, 201);
        for (std::size_t i = 1; i + 1 < pts.size(); ++i)
            CHECK(contains(outer, pts[i].w(), 0.0));
    }
}

TEST_CASE("subordinate_to_spiral")
{
    const SpiralParams p(0.6);
    const EvaluationGrid grid;

    const auto constant = subordinate_to_spiral(TruncatedSeries::constant(1.0, 64), p, grid);
    CHECK(constant.pass);

    // q(0.3 z): image stays well inside, margin from the boundary oracle
    const int N = 64;
    const auto q_small = compose(q_series(p, N), TruncatedSeries::monomial(0.3, 1, N));
    const auto rep = subordinate_to_spiral(q_small, p, grid);
    CHECK(rep.pass);
    double oracle_margin = INFINITY;
    for (int j = 0; j < 720; ++j) {
        const C w = oracle::cpow(1.0 + std::polar(0.3 * 0.95, 2 * M_PI * j / 720), 0.6);
        oracle_margin = std::min(oracle_margin, std::real(oracle::cpow(w, -1.0 / 0.6)) - 0.5);
    }
    CHECK(rep.aggregate.margin > 0);
    CHECK(rep.aggregate.margin == doctest::Approx(oracle_margin).epsilon(1e-9));

    // (1 + z)^(lam + 0.3) leaves the region near the rim
    const auto wide = pow_real(TruncatedSeries::identity(600) + 1.0, 0.9);
    const auto bad = subordinate_to_spiral(wide, p, grid);
    CHECK_FALSE(bad.pass);
    bool outer_failure = false;
    for (const auto &e : bad.entries)
        if (e.margin < 0 && e.r && *e.r >= 0.9)
            outer_failure = true;
    CHECK(outer_failure);

    try {
        (void)subordinate_to_spiral(TruncatedSeries::constant(2.0, 8), p, grid);
        FAIL("expected NotUnitConstantTerm");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotUnitConstantTerm);
    }
}
