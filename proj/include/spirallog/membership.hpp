#ifndef SPIRALLOG_MEMBERSHIP_HPP
#define SPIRALLOG_MEMBERSHIP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spirallog/report.hpp"
#include "spirallog/series.hpp"
#include "spirallog/zoo.hpp"

namespace spirallog {

/// How a Schwarz function was built: either x z^n with 0 <= x <= 1, or
/// e^{i tau} z prod_j (z - z_j) / (1 - conj(z_j) z) with |z_j| < 1.
struct SchwarzWitness {
    enum class Kind { Monomial, Blaschke };

    Kind kind = Kind::Monomial;
    double scale = 1.0;
    int power = 1;
    double rotation = 0.0;
    std::vector<Complex> zeros;
};

/// Analytic self-map of the disk fixing 0, carried as a series together
/// with the recipe that certifies |omega(z)| <= |z|.
class SchwarzFunction {
public:
    static SchwarzFunction monomial(double scale, int power, int order);
    static SchwarzFunction blaschke(double rotation, std::vector<Complex> zeros, int order, std::uint64_t seed = 0);

    const TruncatedSeries &series() const noexcept { return series_; }
    const SchwarzWitness &witness() const noexcept { return witness_; }
    std::uint64_t seed() const noexcept { return seed_; }
    int order() const noexcept { return series_.order(); }

    /// Closed-form value from the witness (no truncation).
    Complex exact(Complex z) const;
    std::string label() const;

private:
    SchwarzFunction(TruncatedSeries series, SchwarzWitness witness, std::uint64_t seed)
        : series_(std::move(series)), witness_(std::move(witness)), seed_(seed)
    {
    }

    TruncatedSeries series_;
    SchwarzWitness witness_;
    std::uint64_t seed_ = 0;
};

/// Blaschke-type sample: degree - 1 zeros uniform in |z| <= 0.8, uniform
/// rotation; fully determined by (seed, degree, order). degree in 1..6.
SchwarzFunction schwarz_sample(std::uint64_t seed, int degree, int order);

/// Degree in 1..6 drawn deterministically from the seed; used by sweeps.
int sample_degree(std::uint64_t seed);

enum class Family { StSs, G, N, Convex, Starlike };

struct FamilyTag {
    Family family = Family::G;
    double lam = 1.0; // ignored for Convex / Starlike
};

/// Accepts ST_SS, G, G_FAMILY, N, N_FAMILY, CONVEX, STARLIKE; throws UnknownFamily.
Family parse_family(const std::string &name);
const char *to_string(Family family) noexcept;

/// z exp( int_0^z (q(omega(t)) - 1) / t dt ), so z f'/f = (1 + omega)^lambda.
NormalizedFunction member_st_ss(double lam, const SchwarzFunction &omega);

/// f' = exp( int_0^z h(t)/t dt ) with h = -lambda omega / (1 - omega), so
/// z f''/f' = h and Re(1 + z f''/f') < 1 + lambda/2.
NormalizedFunction member_G(double lam, const SchwarzFunction &omega);

/// f = z exp( int_0^z h(t)/t dt ), same h, so z f'/f = 1 + h.
NormalizedFunction member_N(double lam, const SchwarzFunction &omega);

/// Evaluates the family's defining real-part expression on the grid and
/// reports the worst margin per ring. f must carry enough terms for the
/// grid (see EvaluationGrid::required_order).
BoundReport verify_condition(const NormalizedFunction &f, const FamilyTag &tag, const EvaluationGrid &grid,
                             const Tolerances &tol = {});

/// Tests f(z)/z against the region bounded by the image of |z| = r_max under
/// G_{F_lambda}(z)/z, by winding number. Entries carry the signed distance
/// to that polygon (positive inside); the bound is minus the polygon's chord
/// error so that points on the true curve pass.
BoundReport check_f_over_z_subordination(const NormalizedFunction &f, double lam, const EvaluationGrid &grid,
                                         const Tolerances &tol = {});

/// Winding number of a closed polygon around p.
int winding_number(std::span<const Complex> polygon, Complex p);

} // namespace spirallog

#endif
