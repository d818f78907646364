#ifndef SPIRALLOG_TOLERANCES_HPP
#define SPIRALLOG_TOLERANCES_HPP

#include <limits>

namespace spirallog {

inline constexpr int kDefaultOrder = 64;

// Every numeric threshold used by the checkers lives here.
struct Tolerances {
    // A bound passes when its margin is >= -pass.
    double pass = 1e-7;
    // Equality (sharpness) is declared when |margin| <= attainment.
    double attainment = 1e-9;
    // div() refuses divisors whose constant term is below this.
    double leading_floor = 1e-12;
    // Slack on "a0 == 1" / "a0 == 0" preconditions; absorbs only rounding.
    double unit_term_slack = 8 * std::numeric_limits<double>::epsilon();
    // contains(): points closer than this to the spiral count as boundary.
    double boundary_epsilon = 64 * std::numeric_limits<double>::epsilon();
    // Target truncation-tail size when a grid picks its evaluation order.
    double grid_tail = 1e-12;

    // Defaults, with `pass` replaced by $SPIRALLOG_TOLERANCE when it parses
    // as a non-negative finite number.
    static Tolerances from_environment();
};

} // namespace spirallog

#endif
