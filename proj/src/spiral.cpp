#include "spirallog/spiral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spirallog/error.hpp"

namespace spirallog {

SpiralParams::SpiralParams(double lam) : lam_(lam)
{
    if (!(lam > 0.0 && lam <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "lambda out of (0,1]");
}

double SpiralParams::max_argument() const noexcept { return lam_ * std::numbers::pi / 2.0; }

double SpiralParams::vertex() const noexcept { return std::pow(2.0, lam_); }

Complex q_eval(const SpiralParams &params, Complex z)
{
    if (!(std::abs(z) < 1.0))
        throw Error(ErrorCode::OutsideDisk, "q_eval: |z| must be < 1");
    return std::exp(params.lam() * std::log(1.0 + z));
}

TruncatedSeries q_series(const SpiralParams &params, int order)
{
    return pow_real(TruncatedSeries::identity(order) + 1.0, params.lam());
}

std::vector<BoundaryPoint> boundary_points(const SpiralParams &params, int count)
{
    if (count < 2)
        throw Error(ErrorCode::InvalidArgument, "boundary_points: count must be >= 2");
    const double lam = params.lam();
    const double half = params.max_argument();
    std::vector<BoundaryPoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        // symmetric form so that phi(i) == -phi(count - 1 - i) exactly
        const double t = static_cast<double>(2 * i - (count - 1)) / static_cast<double>(count - 1);
        const double phi = half * t;
        const double c = std::max(0.0, std::cos(phi / lam));
        pts.push_back({phi, std::pow(2.0 * c, lam)});
    }
    return pts;
}

double containment_margin(const SpiralParams &params, Complex w)
{
    if (!(w.real() > 0.0))
        return w.real() - 0.5;
    // |arg w| < pi/2, so the principal power never crosses the cut.
    return std::pow(w, -1.0 / params.lam()).real() - 0.5;
}

bool contains(const SpiralParams &params, Complex w, double tol, const Tolerances &tolerances)
{
    if (!(w.real() > 0.0))
        return false;
    return containment_margin(params, w) > tolerances.boundary_epsilon - tol;
}

BoundReport subordinate_to_spiral(const TruncatedSeries &p, const SpiralParams &params, const EvaluationGrid &grid,
                                  const Tolerances &tol)
{
    if (std::abs(p[0] - Complex(1.0)) > tol.unit_term_slack)
        throw Error(ErrorCode::NotUnitConstantTerm, "subordinate_to_spiral: p(0) must be 1");
    ReportBuilder b("subordinate_to_spiral", params.lam(), "p", tol);
    for (std::size_t i = 0; i < grid.radii().size(); ++i) {
        const double r = grid.radii()[i];
        double worst = std::numeric_limits<double>::infinity();
        for (const Complex &w : evaluate_ring(p, r, grid.angles_per_ring()))
            worst = std::min(worst, containment_margin(params, w));
        // value is the containment margin itself; bound 0 from below
        b.add("spiral_margin", worst, 0.0, Sense::Lower, r);
    }
    b.tail_slack(tail_bound(p, grid.r_max()));
    return b.build();
}

} // namespace spirallog
