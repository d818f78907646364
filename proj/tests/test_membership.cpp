#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spirallog/bounds.hpp"
#include "spirallog/error.hpp"
#include "spirallog/membership.hpp"
#include "spirallog/spiral.hpp"

using namespace spirallog;
using oracle::C;

namespace {

const EvaluationGrid kGrid;
const int kFine = kGrid.required_order(1e-12);

NormalizedFunction identity_fn(int order) { return NormalizedFunction(TruncatedSeries::identity(order), "z"); }

NormalizedFunction member(Family fam, double lam, std::uint64_t seed, int order)
{
    const auto w = schwarz_sample(seed, sample_degree(seed), order);
    switch (fam) {
    case Family::StSs: return member_st_ss(lam, w);
    case Family::G: return member_G(lam, w);
    default: return member_N(lam, w);
    }
}

} // namespace

TEST_CASE("schwarz samples")
{
    const auto w = SchwarzFunction::blaschke(0.0, {}, 10);
    CHECK(w.series()[1] == C(1));
    for (int k = 2; k <= 10; ++k)
        CHECK(w.series()[k] == C(0));

    const auto a = schwarz_sample(42, 4, 32);
    const auto b = schwarz_sample(42, 4, 32);
    for (int k = 0; k <= 32; ++k)
        CHECK(a.series()[k] == b.series()[k]);
    CHECK(a.witness().zeros.size() == 3);
    CHECK(sample_degree(7) == sample_degree(7));

    std::mt19937_64 rng(9);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int degree = 1 + int(seed % 6);
        const auto s = schwarz_sample(seed, degree, kFine);
        CHECK(s.series()[0] == C(0));
        for (const C &z0 : s.witness().zeros)
            CHECK(std::abs(z0) <= 0.8);
        double grid_max = 0;
        for (const double r : kGrid.radii())
            for (const C &v : evaluate_ring(s.series(), r, 360))
                grid_max = std::max(grid_max, std::abs(v));
        CHECK(grid_max < 1.0);
        for (int i = 0; i < 100; ++i) {
            const C z = oracle::random_point(rng, 0.95);
            const C v = evaluate(s.series(), z);
            CHECK(std::abs(v) <= std::abs(z) + 1e-12);
            CHECK(std::abs(v - s.exact(z)) < 1e-10);
        }
    }
    CHECK_THROWS_AS(schwarz_sample(1, 0, 8), Error);
    CHECK_THROWS_AS(schwarz_sample(1, 7, 8), Error);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int d = sample_degree(seed);
        CHECK((d >= 1 && d <= 6));
    }
}

TEST_CASE("family names")
{
    CHECK(parse_family("ST_SS") == Family::StSs);
    CHECK(parse_family("G_FAMILY") == Family::G);
    CHECK(parse_family("N") == Family::N);
    CHECK(parse_family("CONVEX") == Family::Convex);
    CHECK(parse_family("STARLIKE") == Family::Starlike);
    try {
        (void)parse_family("SPIRAL");
        FAIL("expected UnknownFamily");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::UnknownFamily);
    }
}

TEST_CASE("members from named Schwarz functions")
{
    const auto zero = SchwarzFunction::monomial(0.0, 1, 20);
    for (const double lam : {0.3, 1.0}) {
        for (const auto &f : {member_st_ss(lam, zero), member_G(lam, zero), member_N(lam, zero)})
            for (int k = 2; k <= 20; ++k)
                CHECK(f.a(k) == C(0));
        // f' = (1 - z^n)^(lam/n)
        for (int n = 1; n <= 3; ++n) {
            const auto g = member_G(lam, SchwarzFunction::monomial(1.0, n, 30));
            const auto fp = derivative(g.series());
            const auto want = pow_real(TruncatedSeries::monomial(-1.0, n, 29) + 1.0, lam / n);
            for (int k = 0; k <= 29; ++k)
                CHECK(std::abs(fp[k] - want[k]) < 1e-13);
        }
    }
    // z (1 + z) is N_{F_1} and lies in N(1)
    const NormalizedFunction n1(TruncatedSeries(std::vector<C>{0, 1, 1}), "z(1+z)");
    CHECK(verify_condition(n1, {Family::N, 1.0}, kGrid).pass);
}

TEST_CASE("Alexander duality between sampled G and N members")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        for (const double lam : {0.25, 1.0}) {
            const auto w = schwarz_sample(seed, sample_degree(seed), 48);
            const auto g = member_G(lam, w);
            const auto n = member_N(lam, w);
            const auto zg = derivative(g.series()).times_z();
            for (int k = 1; k < 48; ++k)
                CHECK(std::abs(n.a(k) - zg[k]) < 1e-12);
        }
}

TEST_CASE("verify_condition on trivial and named functions")
{
    const auto z = identity_fn(8);
    for (const Family fam : {Family::StSs, Family::G, Family::N, Family::Convex, Family::Starlike}) {
        const auto rep = verify_condition(z, {fam, 0.5}, kGrid);
        CHECK(rep.pass);
    }
    for (const double lam : {0.3, 0.7, 1.0}) {
        CHECK(verify_condition(closed_form_G_F(lam, kFine), {Family::G, lam}, kGrid).pass);
        // u = (2/lam)(G_F(z)/z - 1) is convex and already normalized
        const auto gz = closed_form_G_F(lam, kFine + 1).series().over_z();
        const auto u = Complex(2.0 / lam) * (gz - 1.0);
        const NormalizedFunction un(u, "u");
        CHECK(verify_condition(un, {Family::Convex, lam}, kGrid).pass);
    }
}

TEST_CASE("sampled members satisfy their defining condition")
{
    for (const Family fam : {Family::StSs, Family::G, Family::N})
        for (const double lam : {0.25, 0.5, 0.75, 1.0})
            for (std::uint64_t seed = 0; seed < 25; ++seed) {
                const auto f = member(fam, lam, seed, kFine);
                const auto rep = verify_condition(f, {fam, lam}, kGrid);
                CHECK_MESSAGE(rep.pass, f.label());
                CHECK(rep.aggregate.margin > -1e-7);
            }
}

TEST_CASE("inclusion chain")
{
    for (const int n : {1, 2, 3})
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto f = member(Family::StSs, 1.0 / (n + 1), seed, kFine);
            CHECK(verify_condition(f, {Family::StSs, 1.0 / n}, kGrid).pass);
        }
}

TEST_CASE("Koebe is rejected")
{
    const auto k = koebe(0.0, kFine);
    CHECK_FALSE(verify_condition(k, {Family::G, 1.0}, kGrid).pass);
    CHECK_FALSE(verify_condition(k, {Family::StSs, 1.0}, kGrid).pass);
}

TEST_CASE("vanishing derivative is a verdict")
{
    // f = z - z^2 has f'(0.5) = 0 on the ring r = 0.5
    const NormalizedFunction f(TruncatedSeries(std::vector<C>{0, 1, -1}), "z-z^2");
    const EvaluationGrid grid({0.5}, 8);
    const auto rep = verify_condition(f, {Family::G, 1.0}, grid);
    CHECK_FALSE(rep.pass);
    CHECK(rep.note.find("DivisionBySmallCoefficient") != std::string::npos);
}

TEST_CASE("winding number")
{
    const std::vector<Complex> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(winding_number(square, {0.5, 0.5}) == 1);
    CHECK(winding_number(square, {1.5, 0.5}) == 0);
    std::vector<Complex> reversed(square.rbegin(), square.rend());
    CHECK(winding_number(reversed, {0.5, 0.5}) == -1);
}

TEST_CASE("f/z subordination")
{
    for (const double lam : {0.5, 1.0}) {
        const auto self = check_f_over_z_subordination(closed_form_G_F(lam, kFine), lam, kGrid);
        CHECK(self.pass);
        CHECK(check_f_over_z_subordination(identity_fn(8), lam, kGrid).pass);
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto f = member(Family::G, 0.5, seed, kFine);
        CHECK_MESSAGE(check_f_over_z_subordination(f, 0.5, kGrid).pass, f.label());
    }
    // a G(1) member is not subordinate in the smaller target of lambda = 0.2
    CHECK_FALSE(check_f_over_z_subordination(closed_form_G_F(1.0, kFine), 0.2, kGrid).pass);
}
