#ifndef SPIRALLOG_SERIES_HPP
#define SPIRALLOG_SERIES_HPP

#include <complex>
#include <span>
#include <vector>

#include "spirallog/tolerances.hpp"

namespace spirallog {

using Complex = std::complex<double>;

/// Degree-N complex Taylor polynomial c0 + c1 z + ... + cN z^N standing in
/// for an analytic germ at the origin. Immutable once built; every entry is
/// finite. Binary operations truncate to the smaller order.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(int order);
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries constant(Complex c, int order);
    /// The series `z`.
    static TruncatedSeries identity(int order);
    static TruncatedSeries monomial(Complex c, int degree, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Coefficient k; zero for k beyond the truncation order.
    Complex operator[](int k) const noexcept
    {
        return k >= 0 && k <= order() ? coeffs_[static_cast<std::size_t>(k)] : Complex{};
    }

    TruncatedSeries truncated(int order) const;

    /// Multiply by z, dropping the top coefficient (order is kept).
    TruncatedSeries times_z() const;
    /// Divide by z; requires c0 == 0. Order drops by one.
    TruncatedSeries over_z(const Tolerances &tol = {}) const;

private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator-(const TruncatedSeries &a);
TruncatedSeries operator*(Complex s, const TruncatedSeries &a);
TruncatedSeries operator+(const TruncatedSeries &a, Complex c);
TruncatedSeries operator-(const TruncatedSeries &a, Complex c);

/// Cauchy product.
TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b);

/// a / b; throws NearZeroLeadingCoefficient when |b0| < tol.leading_floor.
TruncatedSeries div(const TruncatedSeries &a, const TruncatedSeries &b, const Tolerances &tol = {});

/// log a for a0 == 1, from a (log a)' = a'. Result has zero constant term.
TruncatedSeries log1(const TruncatedSeries &a, const Tolerances &tol = {});

/// exp a for a0 == 0, from (exp a)' = a' exp a.
TruncatedSeries exp0(const TruncatedSeries &a, const Tolerances &tol = {});

/// a^lam (principal branch at the origin) for a0 == 1, from
/// a (a^lam)' = lam a' a^lam. For a = 1 + z the coefficients are the
/// binomial numbers lam (lam - 1) ... (lam - k + 1) / k!.
TruncatedSeries pow_real(const TruncatedSeries &a, double lam, const Tolerances &tol = {});

/// c_k -> (k + 1) c_{k+1}; order drops by one.
TruncatedSeries derivative(const TruncatedSeries &a);

/// Antiderivative vanishing at 0; order grows by one.
TruncatedSeries antiderivative(const TruncatedSeries &a);

/// Integral from 0 to z of g(t) / t dt, for g0 == 0.
TruncatedSeries integrate_quotient(const TruncatedSeries &g, const Tolerances &tol = {});

/// outer(inner(z)) for inner0 == 0, by Horner accumulation. O(N^3).
TruncatedSeries compose(const TruncatedSeries &outer, const TruncatedSeries &inner, const Tolerances &tol = {});

/// Horner evaluation of the polynomial at z.
Complex evaluate(const TruncatedSeries &a, Complex z);

/// max|c_k| r^(N+1) / (1 - r): a bound on the neglected tail when the
/// coefficients beyond N do not exceed the largest retained one.
double tail_bound(const TruncatedSeries &a, double r);

/// Sampling of the closed disk |z| <= r_max by concentric rings of equally
/// spaced points (angle 2 pi j / angles_per_ring, j = 0..angles_per_ring-1).
class EvaluationGrid {
public:
    /// Radii {0.1, 0.2, ..., 0.9, 0.95}, 720 angles per ring.
    EvaluationGrid();
    EvaluationGrid(std::vector<double> radii, int angles_per_ring);

    /// Default radii rescaled to end at r_max.
    static EvaluationGrid with_rmax(double r_max, int angles_per_ring = 720);

    std::span<const double> radii() const noexcept { return radii_; }
    int angles_per_ring() const noexcept { return angles_; }
    double r_max() const noexcept { return radii_.back(); }
    std::size_t size() const noexcept { return radii_.size() * static_cast<std::size_t>(angles_); }

    Complex point(std::size_t ring, int angle) const;

    /// Smallest truncation order N with r_max^(N+1) / (1 - r_max) <= tail.
    int required_order(double tail) const;

private:
    std::vector<double> radii_;
    int angles_;
};

/// Values of `a` at r e^(2 pi i j / count), j = 0..count-1, computed as a
/// single discrete Fourier transform of the folded coefficients c_k r^k.
std::vector<Complex> evaluate_ring(const TruncatedSeries &a, double r, int count);

} // namespace spirallog

#endif
