#ifndef SPIRALLOG_BOUNDS_HPP
#define SPIRALLOG_BOUNDS_HPP

#include <vector>

#include "spirallog/membership.hpp"
#include "spirallog/report.hpp"
#include "spirallog/zoo.hpp"

namespace spirallog {

/// Li2(x) = sum x^n / n^2 on [0, 1]. Partial sum with geometric tail below
/// 1e-12 for x <= 1/2; larger x go through Li2(x) + Li2(1-x) = pi^2/6 - ln x ln(1-x).
double li2(double x);

/// Binomial numbers B_1..B_count of (1 + z)^lam.
std::vector<double> binomial_coefficients(double lam, int count);

/// |gamma_n| <= lam/(2n) for n < order, the square-sum comparisons with the
/// binomial numbers of q, and the constant lam^2 pi^2 / 24.
BoundReport gamma_bounds_st_ss(const NormalizedFunction &f, double lam, const Tolerances &tol = {});

/// |gamma_n| <= lam / (2n(n+1)) for n <= order/4.
BoundReport gamma_conjecture_G(const NormalizedFunction &f, double lam, const Tolerances &tol = {});

/// Partial sums of the six series bounds for G(lam):
/// sum |g|, sum n^2|g|^2, sum (n+1)^2|g|^2, sum |g|^2 and the two sharper
/// sum n^2|g|^2 <= lam/(4(lam+2)), sum |g|^2 <= lam^2/4 Li2((1+lam)^-2).
BoundReport gamma_sums_G(const NormalizedFunction &f, double lam, const Tolerances &tol = {});

/// |a_n| <= lam/(n(n-1)) (G) or lam/(n-1) (N) for 2 <= n <= min(order, max_n).
/// Other families throw UnknownFamily.
BoundReport coefficient_bounds(const NormalizedFunction &f, const FamilyTag &tag, int max_n = 16,
                               const Tolerances &tol = {});

Complex hankel_h22(const NormalizedFunction &f);
/// |a2 a4 - a3^2| <= lam^2 / 4.
BoundReport hankel_check(const NormalizedFunction &f, double lam, const Tolerances &tol = {});

struct FeketeSzegoBranch {
    enum class Branch { Low, Mid, High };

    double delta = 0;
    Branch branch = Branch::Mid;
    double bound = 0;
};

const char *to_string(FeketeSzegoBranch::Branch b) noexcept;

/// Piecewise bound on |a3 - delta a2^2|; the break points
/// 3(lam-1)/(4lam) and (1+3lam)/(4lam) belong to the middle branch.
FeketeSzegoBranch fekete_szego_bound(double lam, double delta);
BoundReport fekete_szego_check(const NormalizedFunction &f, double lam, double delta, const Tolerances &tol = {});

/// Piecewise bound on |c2 - delta c1^2| for z/f = 1 + c1 z + c2 z^2 + ...,
/// with break points (lam-1)/(4lam) and (lam+3)/(4lam).
FeketeSzegoBranch inverse_functional_bound(double lam, double delta);
BoundReport inverse_functional_check(const NormalizedFunction &f, double lam, double delta,
                                     const Tolerances &tol = {});

/// Growth, distortion and rotation envelopes on rings of the given radii.
/// G: |f'|, arg f', |f|.  N: |f|, arg(f/z).
BoundReport growth_envelopes(const NormalizedFunction &f, const FamilyTag &tag, const std::vector<double> &radii,
                             int angles = 720, const Tolerances &tol = {});

/// max over 8 <= n <= order of n |a_n|.
double tail_growth(const NormalizedFunction &f);

/// G_{F_{lam/n, n}}: the function attaining |gamma_n| = lam/(2n(n+1)) in G(lam).
NormalizedFunction extremal_G(double lam, int n, int order);
/// N_{F_{lam/m, n}} = z (1 + z^n)^(lam/m).
NormalizedFunction extremal_N(double lam, int m, int n, int order);

/// Members of ST_ss(lam) with z f'/f = q(s z (z + x)/(1 + x z)), s = +1 (F_x)
/// or s = -1 (G_x); they attain the Fekete-Szego bound at the two break points.
NormalizedFunction fekete_szego_pair(double lam, double x, int sign, int order);

} // namespace spirallog

#endif
