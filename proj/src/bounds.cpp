#include "spirallog/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "format.hpp"
#include "spirallog/error.hpp"

namespace spirallog {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kConstantTerms = 200000;

void require_lambda(double lam)
{
    if (!(lam > 0.0 && lam <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "lambda out of (0,1]");
}

double li2_series(double x)
{
    double sum = 0.0;
    double xn = 1.0;
    for (int n = 1;; ++n) {
        xn *= x;
        const double term = xn / (static_cast<double>(n) * n);
        sum += term;
        // remaining terms are below term * x / (1 - x)
        if (term * x / (1.0 - x) < 1e-17 || xn == 0.0)
            break;
    }
    return sum;
}

} // namespace

double li2(double x)
{
    if (!(x >= 0.0 && x <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "li2: x must lie in [0, 1]");
    if (x <= 0.5)
        return li2_series(x);
    const double y = 1.0 - x;
    const double cross = y > 0.0 ? std::log(x) * std::log(y) : 0.0;
    return kPi * kPi / 6.0 - cross - li2_series(y);
}

std::vector<double> binomial_coefficients(double lam, int count)
{
    std::vector<double> b(static_cast<std::size_t>(std::max(count, 0)));
    double c = 1.0;
    for (int k = 1; k <= count; ++k) {
        c *= (lam - k + 1) / k;
        b[static_cast<std::size_t>(k - 1)] = c;
    }
    return b;
}

BoundReport gamma_bounds_st_ss(const NormalizedFunction &f, double lam, const Tolerances &tol)
{
    require_lambda(lam);
    const int count = f.order() - 1;
    const auto g = log_coefficients(f, count);
    const auto big = binomial_coefficients(lam, count + kConstantTerms);

    ReportBuilder b("gamma_bounds_st_ss", lam, f.label(), tol);
    double weighted = 0, plain = 0, b_weighted = 0, b_plain = 0;
    for (int n = 1; n <= count; ++n) {
        const double a = std::abs(g[n]);
        b.add(n, a, lam / (2.0 * n));
        const double bn = big[static_cast<std::size_t>(n - 1)];
        weighted += n * n * a * a;
        plain += a * a;
        b_weighted += bn * bn / 4.0;
        b_plain += bn * bn / (4.0 * n * n);
    }
    b.add("sum_n2_gamma2", weighted, b_weighted);
    b.add("sum_gamma2", plain, b_plain);

    double constant = 0, tail = 0;
    for (int n = 1; n <= count + kConstantTerms; ++n) {
        const double bn = big[static_cast<std::size_t>(n - 1)];
        constant += bn * bn / (4.0 * n * n);
        if (n > count)
            tail += bn * bn / 4.0;
    }
    b.add("binomial_square_constant", constant, lam * lam * kPi * kPi / 24.0);
    b.tail_slack(tail);
    return b.build();
}

BoundReport gamma_conjecture_G(const NormalizedFunction &f, double lam, const Tolerances &tol)
{
    require_lambda(lam);
    const int count = std::min(f.order() / 4, f.order() - 1);
    const auto g = log_coefficients(f, count);
    ReportBuilder b("gamma_conjecture_G", lam, f.label(), tol);
    for (int n = 1; n <= count; ++n)
        b.add(n, std::abs(g[n]), lam / (2.0 * n * (n + 1)));
    return b.build();
}

BoundReport gamma_sums_G(const NormalizedFunction &f, double lam, const Tolerances &tol)
{
    require_lambda(lam);
    const int count = f.order() - 1;
    const auto g = log_coefficients(f, count);
    double s_abs = 0, s_n2 = 0, s_np1 = 0, s_plain = 0;
    for (int n = 1; n <= count; ++n) {
        const double a = std::abs(g[n]);
        s_abs += a;
        s_n2 += double(n) * n * a * a;
        s_np1 += double(n + 1) * (n + 1) * a * a;
        s_plain += a * a;
    }
    const double l2 = lam * lam;
    ReportBuilder b("gamma_sums_G", lam, f.label(), tol);
    b.add("sum_abs_gamma", s_abs, lam / 2.0);
    b.add("sum_n2_gamma2", s_n2, l2 * (kPi * kPi - 6.0) / 24.0);
    b.add("sum_np1_2_gamma2", s_np1, l2 * kPi * kPi / 24.0);
    b.add("sum_gamma2", s_plain, l2 * (kPi * kPi - 9.0) / 12.0);
    b.add("sum_n2_gamma2_psw", s_n2, lam / (4.0 * (lam + 2.0)));
    b.add("sum_gamma2_li2", s_plain, l2 / 4.0 * li2(1.0 / ((1.0 + lam) * (1.0 + lam))));
    // the per-index bound lam/(2n(n+1)) leaves at most lam/(2(count+1)) for sum |gamma|
    b.tail_slack(lam / (2.0 * (count + 1)));
    return b.build();
}

BoundReport coefficient_bounds(const NormalizedFunction &f, const FamilyTag &tag, int max_n, const Tolerances &tol)
{
    if (tag.family != Family::G && tag.family != Family::N)
        throw Error(ErrorCode::UnknownFamily,
                    std::string("coefficient_bounds: no coefficient theorem for family ") + to_string(tag.family));
    require_lambda(tag.lam);
    const double lam = tag.lam;
    const bool g_family = tag.family == Family::G;
    ReportBuilder b(g_family ? "coefficient_bounds_G" : "coefficient_bounds_N", lam, f.label(), tol);
    const int top = std::min(f.order(), max_n);
    for (int n = 2; n <= top; ++n) {
        const double bound = g_family ? lam / (double(n) * (n - 1)) : lam / (n - 1);
        b.add(n, std::abs(f.a(n)), bound);
    }
    return b.build();
}

Complex hankel_h22(const NormalizedFunction &f)
{
    if (f.order() < 4)
        throw Error(ErrorCode::InvalidArgument, "hankel_h22: order must be >= 4");
    return f.a(2) * f.a(4) - f.a(3) * f.a(3);
}

BoundReport hankel_check(const NormalizedFunction &f, double lam, const Tolerances &tol)
{
    require_lambda(lam);
    ReportBuilder b("hankel_h22", lam, f.label(), tol);
    b.add("|a2*a4-a3^2|", std::abs(hankel_h22(f)), lam * lam / 4.0);
    return b.build();
}

const char *to_string(FeketeSzegoBranch::Branch b) noexcept
{
    switch (b) {
    case FeketeSzegoBranch::Branch::Low: return "LOW";
    case FeketeSzegoBranch::Branch::Mid: return "MID";
    case FeketeSzegoBranch::Branch::High: return "HIGH";
    }
    return "?";
}

FeketeSzegoBranch fekete_szego_bound(double lam, double delta)
{
    require_lambda(lam);
    if (!std::isfinite(delta))
        throw Error(ErrorCode::InvalidArgument, "delta must be finite");
    const double lo = 3.0 * (lam - 1.0) / (4.0 * lam);
    const double hi = (1.0 + 3.0 * lam) / (4.0 * lam);
    const double shift = delta + (1.0 - 3.0 * lam) / (4.0 * lam);
    if (delta < lo)
        return {delta, FeketeSzegoBranch::Branch::Low, -lam * lam * shift};
    if (delta > hi)
        return {delta, FeketeSzegoBranch::Branch::High, lam * lam * shift};
    return {delta, FeketeSzegoBranch::Branch::Mid, lam / 2.0};
}

FeketeSzegoBranch inverse_functional_bound(double lam, double delta)
{
    require_lambda(lam);
    if (!std::isfinite(delta))
        throw Error(ErrorCode::InvalidArgument, "delta must be finite");
    const double lo = (lam - 1.0) / (4.0 * lam);
    const double hi = (lam + 3.0) / (4.0 * lam);
    const double shift = delta - (lam + 1.0) / (4.0 * lam);
    if (delta < lo)
        return {delta, FeketeSzegoBranch::Branch::Low, -lam * lam * shift};
    if (delta > hi)
        return {delta, FeketeSzegoBranch::Branch::High, lam * lam * shift};
    return {delta, FeketeSzegoBranch::Branch::Mid, lam / 2.0};
}

namespace {

std::string delta_note(const FeketeSzegoBranch &br)
{
    return "delta=" + detail::format_number(br.delta) + " branch=" + to_string(br.branch);
}

} // namespace

BoundReport fekete_szego_check(const NormalizedFunction &f, double lam, double delta, const Tolerances &tol)
{
    const auto br = fekete_szego_bound(lam, delta);
    ReportBuilder b("fekete_szego", lam, f.label(), tol);
    b.add("|a3-delta*a2^2|", std::abs(f.a(3) - delta * f.a(2) * f.a(2)), br.bound);
    b.note(delta_note(br));
    return b.build();
}

BoundReport inverse_functional_check(const NormalizedFunction &f, double lam, double delta, const Tolerances &tol)
{
    const auto br = inverse_functional_bound(lam, delta);
    const auto &s = f.series();
    TruncatedSeries inv(0);
    try {
        const auto quotient = s.over_z(tol);
        inv = div(TruncatedSeries::constant(1.0, quotient.order()), quotient, tol);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::NearZeroLeadingCoefficient)
            throw Error(ErrorCode::DivisionBySmallCoefficient, "z/f: f(z)/z has a vanishing constant term");
        throw;
    }
    ReportBuilder b("inverse_functional", lam, f.label(), tol);
    b.add("|c2-delta*c1^2|", std::abs(inv[2] - delta * inv[1] * inv[1]), br.bound);
    b.note(delta_note(br));
    return b.build();
}

BoundReport growth_envelopes(const NormalizedFunction &f, const FamilyTag &tag, const std::vector<double> &radii,
                             int angles, const Tolerances &tol)
{
    if (tag.family != Family::G && tag.family != Family::N)
        throw Error(ErrorCode::UnknownFamily,
                    std::string("growth_envelopes: no growth theorem for family ") + to_string(tag.family));
    require_lambda(tag.lam);
    if (angles < 1)
        throw Error(ErrorCode::InvalidArgument, "growth_envelopes: angles must be positive");
    const double lam = tag.lam;
    const double s = 1.0 + lam;
    const bool g_family = tag.family == Family::G;
    const auto &series = f.series();
    const auto fprime = derivative(series);
    const auto quotient = series.over_z();

    ReportBuilder b(g_family ? "growth_envelopes_G" : "growth_envelopes_N", lam, f.label(), tol);
    double rmax = 0;
    for (const double r : radii) {
        if (!(r > 0.0 && r < 1.0))
            throw Error(ErrorCode::InvalidArgument, "growth_envelopes: radii must lie in (0, 1)");
        rmax = std::max(rmax, r);
        const auto fv = evaluate_ring(series, r, angles);
        double fmin = INFINITY, fmax = 0;
        for (const Complex &v : fv) {
            fmin = std::min(fmin, std::abs(v));
            fmax = std::max(fmax, std::abs(v));
        }
        // values that must lie in the right half plane: f' for G, f/z for N
        const auto wv = evaluate_ring(g_family ? fprime : quotient, r, angles);
        double wmin = INFINITY, wmax = 0, argmax = 0;
        for (const Complex &v : wv) {
            wmin = std::min(wmin, std::abs(v));
            wmax = std::max(wmax, std::abs(v));
            argmax = std::max(argmax, std::abs(std::arg(v)));
        }
        const double rot = lam * std::asin(r);
        if (g_family) {
            b.add("min|f'|", wmin, std::pow(1.0 - r, lam), Sense::Lower, r);
            b.add("max|f'|", wmax, std::pow(1.0 + r, lam), Sense::Upper, r);
            b.add("max|arg f'|", argmax, rot, Sense::Upper, r);
            b.add("min|f|", fmin, (1.0 - std::pow(1.0 - r, s)) / s, Sense::Lower, r);
            b.add("max|f|", fmax, (std::pow(1.0 + r, s) - 1.0) / s, Sense::Upper, r);
        } else {
            b.add("min|f|", fmin, r * std::pow(1.0 - r, lam), Sense::Lower, r);
            b.add("max|f|", fmax, r * std::pow(1.0 + r, lam), Sense::Upper, r);
            b.add("max|arg f/z|", argmax, rot, Sense::Upper, r);
        }
    }
    if (rmax > 0)
        b.tail_slack(tail_bound(series, rmax) + tail_bound(fprime, rmax));
    return b.build();
}

double tail_growth(const NormalizedFunction &f)
{
    if (f.order() < 8)
        throw Error(ErrorCode::InvalidArgument, "tail_growth: order must be >= 8");
    double m = 0;
    for (int n = 8; n <= f.order(); ++n)
        m = std::max(m, n * std::abs(f.a(n)));
    return m;
}

NormalizedFunction extremal_G(double lam, int n, int order)
{
    return transform_G(extremal_F(lam, n, n, order));
}

NormalizedFunction extremal_N(double lam, int m, int n, int order)
{
    return transform_N(extremal_F(lam, m, n, order));
}

NormalizedFunction fekete_szego_pair(double lam, double x, int sign, int order)
{
    if (!(x >= 0.0 && x <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "fekete_szego_pair: x must lie in [0, 1]");
    if (sign != 1 && sign != -1)
        throw Error(ErrorCode::InvalidArgument, "fekete_szego_pair: sign must be +1 or -1");
    const double rotation = sign > 0 ? 0.0 : kPi;
    // at x = 1 the factor (z + x)/(1 + x z) cancels to 1
    std::vector<Complex> zeros;
    if (x < 1.0)
        zeros.push_back(-x);
    const auto omega = SchwarzFunction::blaschke(rotation, zeros, order);
    const auto f = member_st_ss(lam, omega);
    return f.relabeled(std::string(sign > 0 ? "F_x" : "G_x") + "[lambda=" + detail::format_number(lam) +
                       ",x=" + detail::format_number(x) + "]");
}

} // namespace spirallog
