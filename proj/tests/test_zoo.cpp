#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "spirallog/bounds.hpp"
#include "spirallog/error.hpp"
#include "spirallog/membership.hpp"
#include "spirallog/zoo.hpp"

using namespace spirallog;
using oracle::C;

namespace {

NormalizedFunction identity_fn(int order) { return NormalizedFunction(TruncatedSeries::identity(order), "z"); }

double coeff_gap(const NormalizedFunction &a, const NormalizedFunction &b, int upto)
{
    double m = 0;
    for (int k = 0; k <= upto; ++k)
        m = std::max(m, std::abs(a.a(k) - b.a(k)));
    return m;
}

} // namespace

TEST_CASE("normalization is enforced")
{
    CHECK_THROWS_AS(NormalizedFunction(TruncatedSeries::constant(1.0, 4), "bad"), Error);
    CHECK_THROWS_AS(NormalizedFunction(TruncatedSeries::monomial(2.0, 1, 4), "bad"), Error);
    const NormalizedFunction f(TruncatedSeries(std::vector<C>{1e-17, 1.0 + 1e-16, 0.5}), "near");
    CHECK(f.a(0) == C(0));
    CHECK(f.a(1) == C(1));
}

TEST_CASE("extremal F")
{
    const auto f = extremal_F(1.0, 1, 1, 10);
    CHECK(std::abs(f.a(2) - 1.0) < 1e-15);
    CHECK(std::abs(f.a(3) - 0.5) < 1e-15);
    // z e^z
    double fact = 1;
    for (int k = 1; k <= 10; ++k) {
        if (k > 1)
            fact *= k - 1;
        CHECK(std::abs(f.a(k) - 1.0 / fact) < 1e-15);
    }
    for (const double lam : {0.2, 0.7}) {
        const auto f1 = extremal_F(lam, 1, 1, 10);
        CHECK(std::abs(f1.a(2) - lam) < 1e-15);
        CHECK(std::abs(f1.a(3) - (3 * lam * lam - lam) / 4) < 1e-15);
        for (int n = 1; n <= 6; ++n) {
            const auto fn = extremal_F(lam, 1, n, 4 * n + 4);
            CHECK(std::abs(fn.a(n + 1) - lam / n) < 1e-15);
            for (int k = 2; k <= n; ++k)
                CHECK(fn.a(k) == C(0));
        }
        for (int m = 1; m <= 4; ++m) {
            const auto fm = extremal_F(lam, m, 1, 10);
            CHECK(std::abs(fm.a(2) - lam / m) < 1e-15);
            // z^3 coefficient: (3 lam^2 - m lam) / (4 m^2)
            CHECK(std::abs(fm.a(3) - (3 * lam * lam - m * lam) / (4.0 * m * m)) < 1e-15);
        }
        // z^{2n+1} coefficient of F_{lam/m, n}: (lam^2 (n + 2) - n m lam) / (4 n^2 m^2)
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 4; ++n) {
                const auto f = extremal_F(lam, m, n, 2 * n + 2);
                const double want = (lam * lam * (n + 2) - n * m * lam) / (4.0 * n * n * m * m);
                CHECK(std::abs(f.a(2 * n + 1) - want) < 1e-14);
            }
    }
    CHECK_THROWS_AS(extremal_F(1.2, 1, 1, 8), Error);
    CHECK_THROWS_AS(extremal_F(0.5, 0, 1, 8), Error);
}

TEST_CASE("member_st_ss with omega = z^n reproduces F")
{
    for (const double lam : {0.3, 1.0})
        for (int n = 1; n <= 4; ++n) {
            const auto a = member_st_ss(lam, SchwarzFunction::monomial(1.0, n, 40));
            CHECK(coeff_gap(a, extremal_F(lam, 1, n, 40), 40) < 1e-13);
        }
}

TEST_CASE("transform G")
{
    CHECK(coeff_gap(transform_G(identity_fn(8)), identity_fn(8), 8) == 0.0);
    const auto g1 = transform_G(extremal_F(1.0, 1, 1, 10));
    CHECK(std::abs(g1.a(2) - 0.5) < 1e-15);
    for (int k = 3; k <= 10; ++k)
        CHECK(std::abs(g1.a(k)) < 1e-15);

    for (const double lam : {0.3, 0.7}) {
        const auto two_routes = coeff_gap(transform_G(extremal_F(lam, 1, 1, 64)), closed_form_G_F(lam, 64), 64);
        CHECK(two_routes < 1e-13);
    }

    // a_n(G_f) = 2 ((n - 1)/n) gamma_{n-1}(f)
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto f = member_st_ss(0.6, schwarz_sample(seed, sample_degree(seed), 32));
        const auto g = transform_G(f);
        const auto gam = log_coefficients(f, 30);
        for (int n = 2; n <= 31; ++n)
            CHECK(std::abs(g.a(n) - 2.0 * (n - 1) / n * gam[n - 1]) < 1e-12);
    }
}

TEST_CASE("transform N")
{
    CHECK(coeff_gap(transform_N(identity_fn(8)), identity_fn(8), 8) == 0.0);
    for (const double lam : {0.25, 0.8}) {
        const auto nf = transform_N(extremal_F(lam, 1, 1, 32));
        const auto b = binomial_coefficients(lam, 31);
        for (int k = 2; k <= 32; ++k)
            CHECK(std::abs(nf.a(k) - b[std::size_t(k - 2)]) < 1e-13);
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                const auto nmn = transform_N(extremal_F(lam, m, n, 30));
                const auto bm = binomial_coefficients(lam / m, 30);
                for (int k = 2; k <= 30; ++k) {
                    const C want = (k - 1) % n == 0 ? C(bm[std::size_t((k - 1) / n - 1)]) : C(0);
                    CHECK(std::abs(nmn.a(k) - want) < 1e-13);
                }
            }
    }
    // Alexander: N_g = z G_g'
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = member_G(0.5, schwarz_sample(seed, sample_degree(seed), 32));
        const auto lhs = transform_N(g);
        const auto rhs = derivative(transform_G(g).series()).times_z();
        for (int k = 1; k < 32; ++k)
            CHECK(std::abs(lhs.a(k) - rhs[k]) < 1e-13);
    }
}

TEST_CASE("log coefficients")
{
    const auto zero = log_coefficients(identity_fn(10), 9);
    for (int n = 1; n <= 9; ++n)
        CHECK(zero[n] == C(0));

    const auto k = log_coefficients(koebe(0.0, 20), 19);
    for (int n = 1; n <= 19; ++n)
        CHECK(std::abs(k[n] - 1.0 / n) < 1e-13);
    const double theta = 0.7;
    const auto kt = log_coefficients(koebe(theta, 20), 19);
    for (int n = 1; n <= 19; ++n)
        CHECK(std::abs(kt[n] - std::polar(1.0, n * theta) / double(n)) < 1e-13);

    for (const double lam : {0.1, 0.5, 1.0}) {
        for (int n = 1; n <= 10; ++n) {
            const auto g = log_coefficients(extremal_F(lam, 1, n, 4 * n + 4), n);
            CHECK(std::abs(g[n] - lam / (2.0 * n)) < 1e-13);
            const auto gg = log_coefficients(extremal_G(lam, n, 4 * n + 4), n);
            CHECK(std::abs(gg[n] - lam / (2.0 * n * (n + 1))) < 1e-11);
        }
        const auto fl = log_coefficients(extremal_F(lam, 1, 1, 24), 20);
        const auto b = binomial_coefficients(lam, 20);
        for (int n = 1; n <= 20; ++n)
            CHECK(std::abs(fl[n] - b[std::size_t(n - 1)] / (2.0 * n)) < 1e-12);
    }

    // 2 gamma_1 = a2, 2 gamma_2 = a3 - a2^2 / 2 on every constructed function
    std::vector<NormalizedFunction> fns{extremal_F(0.4, 2, 1, 16), closed_form_G_F(0.6, 16), koebe(1.1, 16),
                                        extremal_G(0.9, 3, 16)};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto w = schwarz_sample(seed, sample_degree(seed), 16);
        fns.push_back(member_st_ss(0.5, w));
        fns.push_back(member_G(0.5, w));
        fns.push_back(member_N(0.5, w));
    }
    for (const auto &f : fns) {
        const auto g = log_coefficients(f, 2);
        CHECK(std::abs(2.0 * g[1] - f.a(2)) < 1e-14);
        CHECK(std::abs(2.0 * g[2] - (f.a(3) - f.a(2) * f.a(2) / 2.0)) < 1e-14);
    }
    CHECK_THROWS_AS(log_coefficients(identity_fn(10), 10), Error);
}

TEST_CASE("closed form G_F")
{
    const auto g1 = closed_form_G_F(1.0, 8);
    CHECK(std::abs(g1.a(2) - 0.5) < 1e-15);
    for (int k = 3; k <= 8; ++k)
        CHECK(g1.a(k) == C(0));
    for (const double lam : {0.2, 0.5, 0.9}) {
        const auto g = closed_form_G_F(lam, 8);
        CHECK(std::abs(g.a(2) - lam / 2) < 1e-15);
        CHECK(std::abs(g.a(3) - lam * (lam - 1) / 6) < 1e-15);
        const C z(0.3, -0.4);
        CHECK(std::abs(evaluate(closed_form_G_F(lam, 120).series(), z) -
                       (oracle::cpow(1.0 + z, 1 + lam) - 1.0) / (1 + lam)) < 1e-13);
    }
}

TEST_CASE("koebe and rotation")
{
    const auto k = koebe(0.0, 10);
    for (int n = 1; n <= 10; ++n)
        CHECK(k.a(n) == C(n));
    CHECK(std::abs(koebe(M_PI, 4).a(2) + 2.0) < 1e-15);

    const C mu = std::polar(1.0, 0.9);
    const auto f = extremal_F(0.7, 1, 2, 20);
    const auto r = rotate(f, mu);
    const C z(0.2, 0.3);
    CHECK(std::abs(evaluate(r.series(), z) - std::conj(mu) * evaluate(f.series(), mu * z)) < 1e-14);
    const auto gf = log_coefficients(f, 10), gr = log_coefficients(r, 10);
    for (int n = 1; n <= 10; ++n)
        CHECK(std::abs(std::abs(gf[n]) - std::abs(gr[n])) < 1e-14);
    CHECK_THROWS_AS(rotate(f, 2.0), Error);
}

TEST_CASE("json serialization")
{
    const nlohmann::json j = extremal_F(0.5, 2, 3, 6);
    CHECK(j["lambda"] == 0.5);
    CHECK(j["m"] == 2);
    CHECK(j["n"] == 3);
    CHECK(j["order"] == 6);
    CHECK(j["coeffs"].size() == 7);
    CHECK(j["coeffs"][1][0] == 1.0);
    CHECK(j["label"].get<std::string>().find("lambda=0.5") != std::string::npos);
    const nlohmann::json k = koebe(0.0, 3);
    CHECK(k["lambda"].is_null());
}
