#include "spirallog/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "spirallog/error.hpp"

namespace spirallog {

namespace {

void require_order(int order)
{
    if (order < 0)
        throw Error(ErrorCode::InvalidArgument, "series order must be non-negative, got " + std::to_string(order));
}

void require_unit_constant(const TruncatedSeries &a, const Tolerances &tol, const char *op)
{
    if (std::abs(a[0] - Complex(1.0)) > tol.unit_term_slack)
        throw Error(ErrorCode::NotUnitConstantTerm, std::string(op) + ": constant term must be 1");
}

void require_zero_constant(const TruncatedSeries &a, const Tolerances &tol, const char *op)
{
    if (std::abs(a[0]) > tol.unit_term_slack)
        throw Error(ErrorCode::NonzeroConstantTerm, std::string(op) + ": constant term must be 0");
}

} // namespace

TruncatedSeries::TruncatedSeries(int order)
{
    require_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw Error(ErrorCode::InvalidArgument, "series needs at least one coefficient");
    for (const auto &c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw Error(ErrorCode::InvalidArgument, "series coefficients must be finite");
}

TruncatedSeries TruncatedSeries::constant(Complex c, int order)
{
    require_order(order);
    std::vector<Complex> v(static_cast<std::size_t>(order) + 1);
    v[0] = c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::identity(int order) { return monomial(1.0, 1, order); }

TruncatedSeries TruncatedSeries::monomial(Complex c, int degree, int order)
{
    require_order(order);
    if (degree < 0)
        throw Error(ErrorCode::InvalidArgument, "monomial degree must be non-negative");
    std::vector<Complex> v(static_cast<std::size_t>(order) + 1);
    if (degree <= order)
        v[static_cast<std::size_t>(degree)] = c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    require_order(order);
    std::vector<Complex> v(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= std::min(order, this->order()); ++k)
        v[static_cast<std::size_t>(k)] = (*this)[k];
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::times_z() const
{
    std::vector<Complex> v(coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end() - 1, v.begin() + 1);
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::over_z(const Tolerances &tol) const
{
    require_zero_constant(*this, tol, "over_z");
    if (order() < 1)
        throw Error(ErrorCode::InvalidArgument, "over_z: series of order 0 has no quotient by z");
    return TruncatedSeries(std::vector<Complex>(coeffs_.begin() + 1, coeffs_.end()));
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        v[static_cast<std::size_t>(k)] = a[k] + b[k];
    return TruncatedSeries(std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        v[static_cast<std::size_t>(k)] = a[k] - b[k];
    return TruncatedSeries(std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries &a) { return Complex(-1.0) * a; }

TruncatedSeries operator*(Complex s, const TruncatedSeries &a)
{
    std::vector<Complex> v(a.coeffs().begin(), a.coeffs().end());
    for (auto &c : v)
        c *= s;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries operator+(const TruncatedSeries &a, Complex c)
{
    std::vector<Complex> v(a.coeffs().begin(), a.coeffs().end());
    v[0] += c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries &a, Complex c) { return a + (-c); }

TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Complex s{};
        for (int j = 0; j <= k; ++j)
            s += a[j] * b[k - j];
        v[static_cast<std::size_t>(k)] = s;
    }
    return TruncatedSeries(std::move(v));
}

TruncatedSeries div(const TruncatedSeries &a, const TruncatedSeries &b, const Tolerances &tol)
{
    const Complex b0 = b[0];
    if (std::abs(b0) < tol.leading_floor)
        throw Error(ErrorCode::NearZeroLeadingCoefficient, "div: |b0| below floor");
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Complex s = a[k];
        for (int j = 1; j <= k; ++j)
            s -= b[j] * c[static_cast<std::size_t>(k - j)];
        c[static_cast<std::size_t>(k)] = s / b0;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries log1(const TruncatedSeries &a, const Tolerances &tol)
{
    require_unit_constant(a, tol, "log1");
    const int n = a.order();
    std::vector<Complex> l(static_cast<std::size_t>(n) + 1);
    // k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
    for (int k = 1; k <= n; ++k) {
        Complex s = static_cast<double>(k) * a[k];
        for (int j = 1; j < k; ++j)
            s -= static_cast<double>(j) * l[static_cast<std::size_t>(j)] * a[k - j];
        l[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
    }
    return TruncatedSeries(std::move(l));
}

TruncatedSeries exp0(const TruncatedSeries &a, const Tolerances &tol)
{
    require_zero_constant(a, tol, "exp0");
    const int n = a.order();
    std::vector<Complex> e(static_cast<std::size_t>(n) + 1);
    e[0] = 1.0;
    // k e_k = sum_{j=1}^{k} j a_j e_{k-j}
    for (int k = 1; k <= n; ++k) {
        Complex s{};
        for (int j = 1; j <= k; ++j)
            s += static_cast<double>(j) * a[j] * e[static_cast<std::size_t>(k - j)];
        e[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
    }
    return TruncatedSeries(std::move(e));
}

TruncatedSeries pow_real(const TruncatedSeries &a, double lam, const Tolerances &tol)
{
    if (!std::isfinite(lam))
        throw Error(ErrorCode::InvalidArgument, "pow_real: exponent must be finite");
    require_unit_constant(a, tol, "pow_real");
    const int n = a.order();
    std::vector<Complex> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1.0;
    // k p_k = sum_{j=1}^{k} ((lam + 1) j - k) a_j p_{k-j}
    for (int k = 1; k <= n; ++k) {
        Complex s{};
        for (int j = 1; j <= k; ++j)
            s += ((lam + 1.0) * j - k) * a[j] * p[static_cast<std::size_t>(k - j)];
        p[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
    }
    return TruncatedSeries(std::move(p));
}

TruncatedSeries derivative(const TruncatedSeries &a)
{
    const int n = a.order();
    if (n == 0)
        return TruncatedSeries(0);
    std::vector<Complex> d(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        d[static_cast<std::size_t>(k)] = static_cast<double>(k + 1) * a[k + 1];
    return TruncatedSeries(std::move(d));
}

TruncatedSeries antiderivative(const TruncatedSeries &a)
{
    const int n = a.order();
    std::vector<Complex> v(static_cast<std::size_t>(n) + 2);
    for (int k = 0; k <= n; ++k)
        v[static_cast<std::size_t>(k) + 1] = a[k] / static_cast<double>(k + 1);
    return TruncatedSeries(std::move(v));
}

TruncatedSeries integrate_quotient(const TruncatedSeries &g, const Tolerances &tol)
{
    require_zero_constant(g, tol, "integrate_quotient");
    const int n = g.order();
    std::vector<Complex> v(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k)
        v[static_cast<std::size_t>(k)] = g[k] / static_cast<double>(k);
    return TruncatedSeries(std::move(v));
}

TruncatedSeries compose(const TruncatedSeries &outer, const TruncatedSeries &inner, const Tolerances &tol)
{
    if (std::abs(inner[0]) > tol.unit_term_slack)
        throw Error(ErrorCode::NonzeroInnerConstant, "compose: inner series must vanish at 0");
    const int n = std::min(outer.order(), inner.order());
    TruncatedSeries acc = TruncatedSeries::constant(outer[n], n);
    for (int k = n - 1; k >= 0; --k)
        acc = mul(acc, inner) + outer[k];
    return acc;
}

Complex evaluate(const TruncatedSeries &a, Complex z)
{
    Complex acc{};
    for (int k = a.order(); k >= 0; --k)
        acc = acc * z + a[k];
    return acc;
}

double tail_bound(const TruncatedSeries &a, double r)
{
    if (r >= 1.0)
        return std::numeric_limits<double>::infinity();
    double cmax = 0;
    for (const auto &c : a.coeffs())
        cmax = std::max(cmax, std::abs(c));
    return cmax * std::pow(r, a.order() + 1) / (1.0 - r);
}

EvaluationGrid::EvaluationGrid() : EvaluationGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95}, 720) {}

EvaluationGrid::EvaluationGrid(std::vector<double> radii, int angles_per_ring)
    : radii_(std::move(radii)), angles_(angles_per_ring)
{
    if (radii_.empty())
        throw Error(ErrorCode::InvalidArgument, "grid needs at least one radius");
    if (angles_ < 1)
        throw Error(ErrorCode::InvalidArgument, "grid needs a positive number of angles per ring");
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        const double r = radii_[i];
        if (!(r > 0.0 && r < 1.0))
            throw Error(ErrorCode::InvalidArgument, "grid radii must lie in (0, 1)");
        if (i > 0 && !(r > radii_[i - 1]))
            throw Error(ErrorCode::InvalidArgument, "grid radii must be strictly ascending");
    }
}

EvaluationGrid EvaluationGrid::with_rmax(double r_max, int angles_per_ring)
{
    if (!(r_max > 0.0 && r_max < 1.0))
        throw Error(ErrorCode::InvalidArgument, "grid r_max must lie in (0, 1)");
    const EvaluationGrid base;
    std::vector<double> radii;
    for (double r : base.radii())
        radii.push_back(r * r_max / base.r_max());
    return EvaluationGrid(std::move(radii), angles_per_ring);
}

Complex EvaluationGrid::point(std::size_t ring, int angle) const
{
    const double theta = 2.0 * std::numbers::pi * angle / angles_;
    return std::polar(radii_.at(ring), theta);
}

int EvaluationGrid::required_order(double tail) const
{
    const double r = r_max();
    // r^(N+1) / (1 - r) <= tail  <=>  N + 1 >= log(tail (1 - r)) / log r
    const double n = std::log(tail * (1.0 - r)) / std::log(r);
    return std::max(1, static_cast<int>(std::ceil(n)) - 1);
}

} // namespace spirallog
