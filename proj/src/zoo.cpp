#include "spirallog/zoo.hpp"

#include <cmath>
#include <string>

#include "format.hpp"
#include "spirallog/error.hpp"

namespace spirallog {

namespace {

void require_lambda(double lam)
{
    if (!(lam > 0.0 && lam <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "lambda out of (0,1]");
}

TruncatedSeries normalize_head(TruncatedSeries s)
{
    const Tolerances tol;
    if (s.order() < 1)
        throw Error(ErrorCode::InvalidArgument, "normalized function needs order >= 1");
    if (std::abs(s[0]) > tol.unit_term_slack || std::abs(s[1] - Complex(1.0)) > tol.unit_term_slack)
        throw Error(ErrorCode::InvalidArgument, "normalized function needs c0 = 0 and c1 = 1");
    std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
    c[0] = 0.0;
    c[1] = 1.0;
    return TruncatedSeries(std::move(c));
}

} // namespace

NormalizedFunction::NormalizedFunction(TruncatedSeries series, std::string label, std::optional<double> lam,
                                       std::optional<int> m, std::optional<int> n)
    : series_(normalize_head(std::move(series))), label_(std::move(label)), lam_(lam), m_(m), n_(n)
{
}

NormalizedFunction NormalizedFunction::relabeled(std::string label) const
{
    NormalizedFunction g = *this;
    g.label_ = std::move(label);
    return g;
}

NormalizedFunction extremal_F(double lam, int m, int n, int order)
{
    require_lambda(lam);
    if (m < 1 || n < 1)
        throw Error(ErrorCode::InvalidArgument, "extremal_F: m and n must be positive");
    const auto zn = TruncatedSeries::monomial(1.0, n, order);
    const auto q = pow_real(zn + 1.0, lam / m);
    const auto f = exp0(integrate_quotient(q - 1.0)).times_z();
    std::string label = "F[lambda=" + detail::format_number(lam) + ",m=" + std::to_string(m) + ",n=" + std::to_string(n) + "]";
    return NormalizedFunction(f, std::move(label), lam, m, n);
}

namespace {

// z f'(z) / f(z) = f'(z) / (f(z)/z); order drops by one.
TruncatedSeries starlike_quotient(const NormalizedFunction &f)
{
    const Tolerances tol;
    const auto &s = f.series();
    try {
        return div(derivative(s), s.over_z(tol), tol);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::NearZeroLeadingCoefficient)
            throw Error(ErrorCode::DivisionBySmallCoefficient, "f(z)/z lost its unit constant term");
        throw;
    }
}

} // namespace

NormalizedFunction transform_G(const NormalizedFunction &f)
{
    const auto p = starlike_quotient(f);
    return NormalizedFunction(antiderivative(p), "G[" + f.label() + "]", f.lam(), f.m(), f.n());
}

NormalizedFunction transform_N(const NormalizedFunction &f)
{
    const auto p = starlike_quotient(f);
    // z p has the same number of coefficients as f
    std::vector<Complex> c(static_cast<std::size_t>(p.order()) + 2);
    for (int k = 0; k <= p.order(); ++k)
        c[static_cast<std::size_t>(k) + 1] = p[k];
    return NormalizedFunction(TruncatedSeries(std::move(c)), "N[" + f.label() + "]", f.lam(), f.m(), f.n());
}

LogCoefficients log_coefficients(const NormalizedFunction &f, int count)
{
    if (count < 0 || count > f.order() - 1)
        throw Error(ErrorCode::InvalidArgument, "log_coefficients: need 0 <= count <= order - 1");
    const auto l = log1(f.series().over_z());
    std::vector<Complex> g(static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n)
        g[static_cast<std::size_t>(n - 1)] = 0.5 * l[n];
    return LogCoefficients(std::move(g));
}

NormalizedFunction closed_form_G_F(double lam, int order)
{
    require_lambda(lam);
    if (order < 1)
        throw Error(ErrorCode::InvalidArgument, "closed_form_G_F: order must be >= 1");
    const double s = 1.0 + lam;
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    double binom = 1.0; // binom(s, k)
    for (int k = 1; k <= order; ++k) {
        binom *= (s - k + 1) / k;
        c[static_cast<std::size_t>(k)] = binom / s;
    }
    return NormalizedFunction(TruncatedSeries(std::move(c)), "G_F_closed[lambda=" + detail::format_number(lam) + "]", lam, 1, 1);
}

NormalizedFunction koebe(double theta, int order)
{
    if (order < 1)
        throw Error(ErrorCode::InvalidArgument, "koebe: order must be >= 1");
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = static_cast<double>(n) * std::polar(1.0, (n - 1) * theta);
    return NormalizedFunction(TruncatedSeries(std::move(c)), "koebe[theta=" + detail::format_number(theta) + "]");
}

NormalizedFunction rotate(const NormalizedFunction &f, Complex mu)
{
    if (std::abs(std::abs(mu) - 1.0) > 1e-12)
        throw Error(ErrorCode::InvalidArgument, "rotate: |mu| must be 1");
    std::vector<Complex> c(f.series().coeffs().begin(), f.series().coeffs().end());
    Complex power = 1.0; // mu^(k-1)
    for (std::size_t k = 1; k < c.size(); ++k) {
        c[k] *= power;
        power *= mu;
    }
    return NormalizedFunction(TruncatedSeries(std::move(c)), "rot[" + f.label() + "]", f.lam(), f.m(), f.n());
}

void to_json(nlohmann::json &j, const NormalizedFunction &f)
{
    auto coeffs = nlohmann::json::array();
    for (const auto &c : f.series().coeffs())
        coeffs.push_back({c.real(), c.imag()});
    j = nlohmann::json{
        {"label", f.label()},
        {"lambda", f.lam() ? nlohmann::json(*f.lam()) : nlohmann::json(nullptr)},
        {"m", f.m() ? nlohmann::json(*f.m()) : nlohmann::json(nullptr)},
        {"n", f.n() ? nlohmann::json(*f.n()) : nlohmann::json(nullptr)},
        {"order", f.order()},
        {"coeffs", std::move(coeffs)},
    };
}

} // namespace spirallog
