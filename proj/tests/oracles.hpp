#ifndef SPIRALLOG_TEST_ORACLES_HPP
#define SPIRALLOG_TEST_ORACLES_HPP

// Reference computations written independently of the library routines:
// direct loops, closed forms and pointwise complex arithmetic.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;

inline std::vector<C> random_coeffs(std::uint64_t seed, int order, double scale = 1.0)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<C> c(static_cast<std::size_t>(order) + 1);
    for (auto &x : c) {
        // keep |c_k| <= scale
        x = C(u(rng), u(rng)) * (scale / std::sqrt(2.0));
    }
    return c;
}

inline std::vector<C> convolve(const std::vector<C> &a, const std::vector<C> &b)
{
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<C> c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n)
                c[i + j] += a[i] * b[j];
    return c;
}

// lam (lam - 1) ... (lam - k + 1) / k! as an explicit product.
inline double binomial_product(double lam, int k)
{
    double num = 1.0, den = 1.0;
    for (int j = 0; j < k; ++j) {
        num *= lam - j;
        den *= j + 1;
    }
    return num / den;
}

inline C horner(const std::vector<C> &c, C z)
{
    C s = 0;
    for (std::size_t k = c.size(); k-- > 0;)
        s = s * z + c[k];
    return s;
}

// Direct principal power via complex log.
inline C cpow(C w, double e) { return std::exp(e * std::log(w)); }

inline double li2_partial(double x, int terms)
{
    double s = 0;
    for (int n = 1; n <= terms; ++n)
        s += std::pow(x, n) / (double(n) * n);
    return s;
}

inline double max_abs_diff(const std::vector<C> &a, const std::vector<C> &b)
{
    double m = 0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Point of |z| <= r_max drawn from a seeded stream.
inline C random_point(std::mt19937_64 &rng, double r_max)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = r_max * std::sqrt(u(rng));
    return std::polar(r, 2.0 * M_PI * u(rng));
}

} // namespace oracle

#endif
