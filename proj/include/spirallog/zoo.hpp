#ifndef SPIRALLOG_ZOO_HPP
#define SPIRALLOG_ZOO_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "spirallog/series.hpp"

namespace spirallog {

/// f(z) = z + a2 z^2 + ... ; c0 == 0 and c1 == 1 exactly.
class NormalizedFunction {
public:
    /// Throws InvalidArgument unless c0 and c1 are 0 and 1 up to rounding;
    /// they are then stored as exact 0 and 1.
    NormalizedFunction(TruncatedSeries series, std::string label, std::optional<double> lam = std::nullopt,
                       std::optional<int> m = std::nullopt, std::optional<int> n = std::nullopt);

    const TruncatedSeries &series() const noexcept { return series_; }
    const std::string &label() const noexcept { return label_; }
    std::optional<double> lam() const noexcept { return lam_; }
    std::optional<int> m() const noexcept { return m_; }
    std::optional<int> n() const noexcept { return n_; }
    int order() const noexcept { return series_.order(); }

    /// Taylor coefficient a_k (a_1 == 1).
    Complex a(int k) const noexcept { return series_[k]; }

    NormalizedFunction relabeled(std::string label) const;

private:
    TruncatedSeries series_;
    std::string label_;
    std::optional<double> lam_;
    std::optional<int> m_;
    std::optional<int> n_;
};

/// gamma_1..gamma_M from log(f(z)/z) = sum 2 gamma_n z^n.
class LogCoefficients {
public:
    explicit LogCoefficients(std::vector<Complex> gammas) : gammas_(std::move(gammas)) {}

    int size() const noexcept { return static_cast<int>(gammas_.size()); }
    /// gamma_n, 1-based.
    Complex operator[](int n) const { return gammas_.at(static_cast<std::size_t>(n - 1)); }
    const std::vector<Complex> &values() const noexcept { return gammas_; }

private:
    std::vector<Complex> gammas_;
};

/// F_{lam/m, n}(z) = z exp( int_0^z ((1 + t^n)^(lam/m) - 1) / t dt ), so that
/// z F'/F = (1 + z^n)^(lam/m). m = n = 1 gives F_lam.
NormalizedFunction extremal_F(double lam, int m, int n, int order);

/// G_f(z) = int_0^z t f'(t) / f(t) dt.
NormalizedFunction transform_G(const NormalizedFunction &f);

/// N_f(z) = z G_f'(z) = z^2 f'(z) / f(z).
NormalizedFunction transform_N(const NormalizedFunction &f);

LogCoefficients log_coefficients(const NormalizedFunction &f, int count);

/// ((1 + z)^(1 + lam) - 1) / (1 + lam), coefficients binom(1 + lam, k) / (1 + lam).
NormalizedFunction closed_form_G_F(double lam, int order);

/// z (1 - e^{i theta} z)^-2, a_n = n e^{i (n-1) theta}.
NormalizedFunction koebe(double theta, int order);

/// conj(mu) f(mu z) for |mu| == 1.
NormalizedFunction rotate(const NormalizedFunction &f, Complex mu);

void to_json(nlohmann::json &j, const NormalizedFunction &f);

} // namespace spirallog

#endif
