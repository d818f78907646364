#ifndef SPIRALLOG_SPIRAL_HPP
#define SPIRALLOG_SPIRAL_HPP

#include <vector>

#include "spirallog/report.hpp"
#include "spirallog/series.hpp"

namespace spirallog {

/// The exponent lambda in (0, 1] of q(z) = (1 + z)^lambda, whose image of the
/// unit disk is bounded by the sinusoidal spiral rho = (2 cos(phi/lambda))^lambda.
class SpiralParams {
public:
    explicit SpiralParams(double lam);

    double lam() const noexcept { return lam_; }
    /// Largest |arg w| on the closed region: lambda pi / 2.
    double max_argument() const noexcept;
    /// The real vertex 2^lambda.
    double vertex() const noexcept;

private:
    double lam_;
};

struct BoundaryPoint {
    double phi = 0;
    double rho = 0;

    Complex w() const { return std::polar(rho, phi); }
};

/// Principal-branch (1 + z)^lambda; throws OutsideDisk for |z| >= 1.
Complex q_eval(const SpiralParams &params, Complex z);

/// Series of q(z) = (1 + z)^lambda.
TruncatedSeries q_series(const SpiralParams &params, int order);

/// `count` points with phi uniformly spaced over [-lambda pi/2, lambda pi/2],
/// both ends included. phi = 0 is hit exactly when `count` is odd.
std::vector<BoundaryPoint> boundary_points(const SpiralParams &params, int count);

/// Signed distance-like margin of w from the spiral: Re(w^(-1/lambda)) - 1/2
/// for Re w > 0 (positive inside), and Re(w) - 1/2 otherwise.
double containment_margin(const SpiralParams &params, Complex w);

/// True iff Re w > 0 and Re(w^(-1/lambda)) > 1/2 - tol. Points within
/// Tolerances::boundary_epsilon of the curve are treated as on it.
bool contains(const SpiralParams &params, Complex w, double tol, const Tolerances &tolerances = {});

/// Subordination of p (p0 == 1) to q, tested as range containment on the
/// grid; q is convex univalent so this is equivalent to p(D) inside q(D).
BoundReport subordinate_to_spiral(const TruncatedSeries &p, const SpiralParams &params, const EvaluationGrid &grid,
                                  const Tolerances &tol = {});

} // namespace spirallog

#endif
