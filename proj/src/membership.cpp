#include "spirallog/membership.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "format.hpp"
#include "spirallog/error.hpp"
#include "spirallog/spiral.hpp"

namespace spirallog {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxZeroModulus = 0.8;

// Uniform doubles in [0, 1) with 53 random bits; unlike the standard
// distributions this is identical across standard library implementations.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

void require_lambda(double lam)
{
    if (!(lam > 0.0 && lam <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "lambda out of (0,1]");
}

} // namespace

SchwarzFunction SchwarzFunction::monomial(double scale, int power, int order)
{
    if (!(scale >= 0.0 && scale <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "Schwarz monomial scale must lie in [0, 1]");
    if (power < 1)
        throw Error(ErrorCode::InvalidArgument, "Schwarz monomial power must be >= 1");
    SchwarzWitness w;
    w.kind = SchwarzWitness::Kind::Monomial;
    w.scale = scale;
    w.power = power;
    return SchwarzFunction(TruncatedSeries::monomial(scale, power, order), std::move(w), 0);
}

SchwarzFunction SchwarzFunction::blaschke(double rotation, std::vector<Complex> zeros, int order, std::uint64_t seed)
{
    const auto z = TruncatedSeries::identity(order);
    const auto one = TruncatedSeries::constant(1.0, order);
    TruncatedSeries s = TruncatedSeries::constant(std::polar(1.0, rotation), order);
    for (const Complex &a : zeros) {
        if (!(std::abs(a) < 1.0))
            throw Error(ErrorCode::InvalidArgument, "Blaschke zeros must lie in the open disk");
        s = mul(s, div(z - a, one - std::conj(a) * z));
    }
    SchwarzWitness w;
    w.kind = SchwarzWitness::Kind::Blaschke;
    w.rotation = rotation;
    w.zeros = std::move(zeros);
    return SchwarzFunction(s.times_z(), std::move(w), seed);
}

Complex SchwarzFunction::exact(Complex z) const
{
    if (witness_.kind == SchwarzWitness::Kind::Monomial)
        return witness_.scale * std::pow(z, witness_.power);
    Complex v = std::polar(1.0, witness_.rotation) * z;
    for (const Complex &a : witness_.zeros)
        v *= (z - a) / (1.0 - std::conj(a) * z);
    return v;
}

std::string SchwarzFunction::label() const
{
    if (witness_.kind == SchwarzWitness::Kind::Monomial)
        return "omega=" + detail::format_number(witness_.scale) + "z^" + std::to_string(witness_.power);
    return "omega=blaschke(seed=" + std::to_string(seed_) + ",degree=" + std::to_string(witness_.zeros.size() + 1) +
           ")";
}

SchwarzFunction schwarz_sample(std::uint64_t seed, int degree, int order)
{
    if (degree < 1 || degree > 6)
        throw Error(ErrorCode::InvalidArgument, "schwarz_sample: degree must lie in 1..6");
    UniformStream u(seed);
    const double rotation = kTwoPi * u.next();
    std::vector<Complex> zeros;
    for (int j = 0; j + 1 < degree; ++j) {
        const double radius = kMaxZeroModulus * std::sqrt(u.next());
        zeros.push_back(std::polar(radius, kTwoPi * u.next()));
    }
    return SchwarzFunction::blaschke(rotation, std::move(zeros), order, seed);
}

int sample_degree(std::uint64_t seed)
{
    std::mt19937_64 engine(seed ^ 0x9E3779B97F4A7C15ULL);
    return static_cast<int>(engine() % 6) + 1;
}

Family parse_family(const std::string &name)
{
    if (name == "ST_SS")
        return Family::StSs;
    if (name == "G" || name == "G_FAMILY")
        return Family::G;
    if (name == "N" || name == "N_FAMILY")
        return Family::N;
    if (name == "CONVEX")
        return Family::Convex;
    if (name == "STARLIKE")
        return Family::Starlike;
    throw Error(ErrorCode::UnknownFamily, "unknown family '" + name + "'");
}

const char *to_string(Family family) noexcept
{
    switch (family) {
    case Family::StSs: return "ST_SS";
    case Family::G: return "G";
    case Family::N: return "N";
    case Family::Convex: return "CONVEX";
    case Family::Starlike: return "STARLIKE";
    }
    return "?";
}

NormalizedFunction member_st_ss(double lam, const SchwarzFunction &omega)
{
    require_lambda(lam);
    const auto p = pow_real(omega.series() + 1.0, lam);
    const auto f = exp0(integrate_quotient(p - 1.0)).times_z();
    return NormalizedFunction(f, "ST_SS[lambda=" + detail::format_number(lam) + "," + omega.label() + "]", lam);
}

namespace {

// -lambda omega / (1 - omega): a Schwarz function pushed into Re h < lambda/2.
TruncatedSeries half_plane_image(double lam, const SchwarzFunction &omega)
{
    const auto &w = omega.series();
    return Complex(-lam) * div(w, TruncatedSeries::constant(1.0, w.order()) - w);
}

} // namespace

NormalizedFunction member_G(double lam, const SchwarzFunction &omega)
{
    require_lambda(lam);
    const auto fprime = exp0(integrate_quotient(half_plane_image(lam, omega)));
    const auto f = antiderivative(fprime).truncated(fprime.order());
    return NormalizedFunction(f, "G[lambda=" + detail::format_number(lam) + "," + omega.label() + "]", lam);
}

NormalizedFunction member_N(double lam, const SchwarzFunction &omega)
{
    require_lambda(lam);
    const auto f = exp0(integrate_quotient(half_plane_image(lam, omega))).times_z();
    return NormalizedFunction(f, "N[lambda=" + detail::format_number(lam) + "," + omega.label() + "]", lam);
}

BoundReport verify_condition(const NormalizedFunction &f, const FamilyTag &tag, const EvaluationGrid &grid,
                             const Tolerances &tol)
{
    const Family fam = tag.family;
    const bool uses_lambda = fam == Family::StSs || fam == Family::G || fam == Family::N;
    if (uses_lambda)
        require_lambda(tag.lam);
    const double lam = uses_lambda ? tag.lam : 0.0;
    // second-derivative families vs. first-derivative families
    const bool curvature = fam == Family::G || fam == Family::Convex;

    std::string quantity;
    double bound = 0.0;
    Sense sense = Sense::Lower;
    switch (fam) {
    case Family::G: quantity = "re(1+zf''/f')"; bound = 1.0 + lam / 2.0; sense = Sense::Upper; break;
    case Family::Convex: quantity = "re(1+zf''/f')"; break;
    case Family::N: quantity = "re(zf'/f)"; bound = 1.0 + lam / 2.0; sense = Sense::Upper; break;
    case Family::Starlike: quantity = "re(zf'/f)"; break;
    case Family::StSs: quantity = "spiral_margin(zf'/f)"; break;
    }

    ReportBuilder b(std::string("verify_condition:") + to_string(fam), lam, f.label(), tol);
    const auto &s = f.series();
    const auto d1 = derivative(s);
    const auto d2 = derivative(d1);
    const int count = grid.angles_per_ring();
    std::optional<SpiralParams> spiral;
    if (fam == Family::StSs)
        spiral.emplace(lam);

    bool singular = false;
    for (std::size_t i = 0; i < grid.radii().size(); ++i) {
        const double r = grid.radii()[i];
        const auto fv = evaluate_ring(s, r, count);
        const auto f1 = evaluate_ring(d1, r, count);
        const auto f2 = curvature ? evaluate_ring(d2, r, count) : std::vector<Complex>{};
        double worst = sense == Sense::Upper ? -std::numeric_limits<double>::infinity()
                                             : std::numeric_limits<double>::infinity();
        for (int j = 0; j < count; ++j) {
            const std::size_t jj = static_cast<std::size_t>(j);
            const Complex z = grid.point(i, j);
            Complex w;
            if (curvature) {
                if (std::abs(f1[jj]) < tol.leading_floor) {
                    singular = true;
                    continue;
                }
                w = 1.0 + z * f2[jj] / f1[jj];
            } else {
                if (std::abs(fv[jj]) < tol.leading_floor * r) {
                    singular = true;
                    continue;
                }
                w = z * f1[jj] / fv[jj];
            }
            const double v = spiral ? containment_margin(*spiral, w) : w.real();
            worst = sense == Sense::Upper ? std::max(worst, v) : std::min(worst, v);
        }
        b.add(quantity, worst, bound, sense, r);
    }
    if (singular)
        b.fail("DivisionBySmallCoefficient: f or f' vanishes on the grid");
    b.tail_slack(tail_bound(curvature ? d2 : d1, grid.r_max()));
    return b.build();
}

int winding_number(std::span<const Complex> polygon, Complex p)
{
    int wn = 0;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = polygon[i];
        const Complex b = polygon[(i + 1) % n];
        const double cross = (b.real() - a.real()) * (p.imag() - a.imag()) - (p.real() - a.real()) * (b.imag() - a.imag());
        if (a.imag() <= p.imag()) {
            if (b.imag() > p.imag() && cross > 0)
                ++wn;
        } else if (b.imag() <= p.imag() && cross < 0) {
            --wn;
        }
    }
    return wn;
}

namespace {

double segment_distance(Complex p, Complex a, Complex b)
{
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    double t = len2 > 0 ? ((p - a) * std::conj(ab)).real() / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

double polygon_distance(std::span<const Complex> polygon, Complex p)
{
    double d = std::numeric_limits<double>::infinity();
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i)
        d = std::min(d, segment_distance(p, polygon[i], polygon[(i + 1) % n]));
    return d;
}

} // namespace

BoundReport check_f_over_z_subordination(const NormalizedFunction &f, double lam, const EvaluationGrid &grid,
                                         const Tolerances &tol)
{
    require_lambda(lam);
    const double s = 1.0 + lam;
    auto target = [s](Complex z) { return (std::pow(1.0 + z, s) - 1.0) / (s * z); };

    const double rmax = grid.r_max();
    const int vertices = std::max(4096, 4 * grid.angles_per_ring());
    std::vector<Complex> polygon(static_cast<std::size_t>(vertices));
    for (int j = 0; j < vertices; ++j)
        polygon[static_cast<std::size_t>(j)] = target(std::polar(rmax, kTwoPi * j / vertices));
    // largest gap between an arc midpoint and its chord
    double chord_slack = 0.0;
    for (int j = 0; j < vertices; ++j) {
        const Complex mid = target(std::polar(rmax, kTwoPi * (j + 0.5) / vertices));
        chord_slack = std::max(chord_slack, segment_distance(mid, polygon[static_cast<std::size_t>(j)],
                                                             polygon[static_cast<std::size_t>((j + 1) % vertices)]));
    }
    const Complex center = 1.0; // G_{F_lambda}(z)/z at z = 0
    if (winding_number(polygon, center) == 0)
        throw Error(ErrorCode::InvalidArgument, "target polygon does not enclose its center");
    const double inradius = polygon_distance(polygon, center);

    ReportBuilder b("f_over_z_subordination", lam, f.label(), tol);
    const auto quotient = f.series().over_z();
    std::vector<Complex> pts;
    for (std::size_t i = 0; i < grid.radii().size(); ++i) {
        const double r = grid.radii()[i];
        pts = evaluate_ring(quotient, r, grid.angles_per_ring());
        std::sort(pts.begin(), pts.end(),
                  [&](Complex a, Complex c) { return std::abs(a - center) > std::abs(c - center); });
        double worst = std::numeric_limits<double>::infinity();
        for (const Complex &p : pts) {
            // inradius - |p - c| bounds the signed distance from below
            if (inradius - std::abs(p - center) >= worst)
                break;
            const double d = polygon_distance(polygon, p);
            worst = std::min(worst, winding_number(polygon, p) != 0 ? d : -d);
        }
        b.add("signed_distance(f/z)", worst, -chord_slack, Sense::Lower, r);
    }
    b.tail_slack(tail_bound(quotient, rmax));
    return b.build();
}

} // namespace spirallog
