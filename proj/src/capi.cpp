#include "spirallog/spirallog.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "spirallog/bounds.hpp"
#include "spirallog/campaign.hpp"
#include "spirallog/error.hpp"
#include "spirallog/membership.hpp"
#include "spirallog/spiral.hpp"
#include "spirallog/zoo.hpp"

struct sl_series {
    spirallog::TruncatedSeries s;
};

struct sl_function {
    spirallog::NormalizedFunction f;
};

namespace {

using namespace spirallog;

thread_local std::string last_error;

sl_status status_of(ErrorCode c)
{
    switch (c) {
    case ErrorCode::InvalidArgument: return SL_INVALID_ARGUMENT;
    case ErrorCode::NearZeroLeadingCoefficient: return SL_NEAR_ZERO_LEADING_COEFFICIENT;
    case ErrorCode::NotUnitConstantTerm: return SL_NOT_UNIT_CONSTANT_TERM;
    case ErrorCode::NonzeroConstantTerm: return SL_NONZERO_CONSTANT_TERM;
    case ErrorCode::NonzeroInnerConstant: return SL_NONZERO_INNER_CONSTANT;
    case ErrorCode::OutsideDisk: return SL_OUTSIDE_DISK;
    case ErrorCode::DivisionBySmallCoefficient: return SL_DIVISION_BY_SMALL_COEFFICIENT;
    case ErrorCode::UnknownFamily: return SL_UNKNOWN_FAMILY;
    case ErrorCode::MissingArtifacts: return SL_MISSING_ARTIFACTS;
    case ErrorCode::Io: return SL_IO;
    }
    return SL_INTERNAL;
}

template <class Fn>
sl_status guarded(Fn &&fn)
{
    try {
        fn();
        last_error.clear();
        return SL_OK;
    } catch (const Error &e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const nlohmann::json::exception &e) {
        last_error = std::string("invalid JSON: ") + e.what();
        return SL_INVALID_ARGUMENT;
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return SL_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return SL_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return SL_INTERNAL;
    }
}

void need(const void *p, const char *what)
{
    if (!p)
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

Complex to_cpp(sl_complex z) { return {z.re, z.im}; }
sl_complex to_c(Complex z) { return {z.real(), z.imag()}; }

char *dup_string(const std::string &s)
{
    char *p = static_cast<char *>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class Op>
sl_status unary(const sl_series *a, sl_series **out, Op op)
{
    return guarded([&] {
        need(a, "series");
        need(out, "out");
        *out = new sl_series{op(a->s)};
    });
}

template <class Op>
sl_status binary(const sl_series *a, const sl_series *b, sl_series **out, Op op)
{
    return guarded([&] {
        need(a, "series");
        need(b, "series");
        need(out, "out");
        *out = new sl_series{op(a->s, b->s)};
    });
}

sl_status make_function(sl_function **out, const std::function<NormalizedFunction()> &make)
{
    return guarded([&] {
        need(out, "out");
        *out = new sl_function{make()};
    });
}

BoundReport run_check(const NormalizedFunction &f, const std::string &check, double lam, double delta,
                      const Tolerances &tol)
{
    if (check == "gamma_st_ss") return gamma_bounds_st_ss(f, lam, tol);
    if (check == "gamma_conjecture_G") return gamma_conjecture_G(f, lam, tol);
    if (check == "gamma_sums_G") return gamma_sums_G(f, lam, tol);
    if (check == "coefficients_G") return coefficient_bounds(f, {Family::G, lam}, 16, tol);
    if (check == "coefficients_N") return coefficient_bounds(f, {Family::N, lam}, 16, tol);
    if (check == "hankel") return hankel_check(f, lam, tol);
    if (check == "fekete_szego") return fekete_szego_check(f, lam, delta, tol);
    if (check == "inverse_functional") return inverse_functional_check(f, lam, delta, tol);
    const EvaluationGrid grid;
    const std::vector<double> radii(grid.radii().begin(), grid.radii().end());
    if (check == "growth_G") return growth_envelopes(f, {Family::G, lam}, radii, grid.angles_per_ring(), tol);
    if (check == "growth_N") return growth_envelopes(f, {Family::N, lam}, radii, grid.angles_per_ring(), tol);
    if (check == "subordination") return check_f_over_z_subordination(f, lam, grid, tol);
    if (check.rfind("verify_", 0) == 0)
        return verify_condition(f, {parse_family(check.substr(7)), lam}, grid, tol);
    throw Error(ErrorCode::InvalidArgument, "unknown check '" + check + "'");
}

} // namespace

extern "C" {

const char *sl_version(void) { return "1.0.0"; }

const char *sl_status_name(sl_status status)
{
    switch (status) {
    case SL_OK: return "OK";
    case SL_INVALID_ARGUMENT: return "InvalidArgument";
    case SL_NEAR_ZERO_LEADING_COEFFICIENT: return "NearZeroLeadingCoefficient";
    case SL_NOT_UNIT_CONSTANT_TERM: return "NotUnitConstantTerm";
    case SL_NONZERO_CONSTANT_TERM: return "NonzeroConstantTerm";
    case SL_NONZERO_INNER_CONSTANT: return "NonzeroInnerConstant";
    case SL_OUTSIDE_DISK: return "OutsideDisk";
    case SL_DIVISION_BY_SMALL_COEFFICIENT: return "DivisionBySmallCoefficient";
    case SL_UNKNOWN_FAMILY: return "UnknownFamily";
    case SL_MISSING_ARTIFACTS: return "MissingArtifacts";
    case SL_IO: return "Io";
    case SL_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char *sl_last_error_message(void) { return last_error.c_str(); }

void sl_string_free(char *s) { std::free(s); }

sl_status sl_series_create(const sl_complex *coeffs, size_t count, sl_series **out)
{
    return guarded([&] {
        need(coeffs, "coeffs");
        need(out, "out");
        std::vector<Complex> c(count);
        for (size_t i = 0; i < count; ++i)
            c[i] = to_cpp(coeffs[i]);
        *out = new sl_series{TruncatedSeries(std::move(c))};
    });
}

void sl_series_free(sl_series *s) { delete s; }

int sl_series_order(const sl_series *s) { return s ? s->s.order() : -1; }

sl_status sl_series_coefficients(const sl_series *s, sl_complex *out, size_t capacity, size_t *written)
{
    return guarded([&] {
        need(s, "series");
        need(out, "out");
        const auto c = s->s.coeffs();
        const size_t n = std::min(capacity, c.size());
        for (size_t i = 0; i < n; ++i)
            out[i] = to_c(c[i]);
        if (written)
            *written = n;
    });
}

sl_status sl_series_mul(const sl_series *a, const sl_series *b, sl_series **out)
{
    return binary(a, b, out, [](const auto &x, const auto &y) { return mul(x, y); });
}

sl_status sl_series_div(const sl_series *a, const sl_series *b, sl_series **out)
{
    return binary(a, b, out, [](const auto &x, const auto &y) { return div(x, y, Tolerances::from_environment()); });
}

sl_status sl_series_log1(const sl_series *a, sl_series **out)
{
    return unary(a, out, [](const auto &x) { return log1(x); });
}

sl_status sl_series_exp0(const sl_series *a, sl_series **out)
{
    return unary(a, out, [](const auto &x) { return exp0(x); });
}

sl_status sl_series_pow_real(const sl_series *a, double lam, sl_series **out)
{
    return unary(a, out, [lam](const auto &x) { return pow_real(x, lam); });
}

sl_status sl_series_derivative(const sl_series *a, sl_series **out)
{
    return unary(a, out, [](const auto &x) { return derivative(x); });
}

sl_status sl_series_integrate_quotient(const sl_series *g, sl_series **out)
{
    return unary(g, out, [](const auto &x) { return integrate_quotient(x); });
}

sl_status sl_series_compose(const sl_series *outer, const sl_series *inner, sl_series **out)
{
    return binary(outer, inner, out, [](const auto &x, const auto &y) { return compose(x, y); });
}

sl_status sl_series_evaluate(const sl_series *a, sl_complex z, sl_complex *out)
{
    return guarded([&] {
        need(a, "series");
        need(out, "out");
        *out = to_c(evaluate(a->s, to_cpp(z)));
    });
}

void sl_function_free(sl_function *f) { delete f; }

sl_status sl_function_from_series(const sl_series *s, const char *label, sl_function **out)
{
    return make_function(out, [&] {
        need(s, "series");
        return NormalizedFunction(s->s, label ? label : "user");
    });
}

sl_status sl_function_series(const sl_function *f, sl_series **out)
{
    return guarded([&] {
        need(f, "function");
        need(out, "out");
        *out = new sl_series{f->f.series()};
    });
}

sl_status sl_function_extremal_F(double lam, int m, int n, int order, sl_function **out)
{
    return make_function(out, [&] { return extremal_F(lam, m, n, order); });
}

sl_status sl_function_closed_form_G_F(double lam, int order, sl_function **out)
{
    return make_function(out, [&] { return closed_form_G_F(lam, order); });
}

sl_status sl_function_koebe(double theta, int order, sl_function **out)
{
    return make_function(out, [&] { return koebe(theta, order); });
}

sl_status sl_function_member(const char *family, double lam, uint64_t seed, int degree, int order,
                             sl_function **out)
{
    return make_function(out, [&] {
        need(family, "family");
        const Family fam = parse_family(family);
        const auto omega = schwarz_sample(seed, degree == 0 ? sample_degree(seed) : degree, order);
        switch (fam) {
        case Family::StSs: return member_st_ss(lam, omega);
        case Family::G: return member_G(lam, omega);
        case Family::N: return member_N(lam, omega);
        default: break;
        }
        throw Error(ErrorCode::UnknownFamily, std::string("no sampler for family ") + to_string(fam));
    });
}

sl_status sl_function_transform_G(const sl_function *f, sl_function **out)
{
    return make_function(out, [&] {
        need(f, "function");
        return transform_G(f->f);
    });
}

sl_status sl_function_transform_N(const sl_function *f, sl_function **out)
{
    return make_function(out, [&] {
        need(f, "function");
        return transform_N(f->f);
    });
}

sl_status sl_function_log_coefficients(const sl_function *f, int count, sl_complex *out)
{
    return guarded([&] {
        need(f, "function");
        need(out, "out");
        const auto g = log_coefficients(f->f, count);
        for (int n = 1; n <= count; ++n)
            out[n - 1] = to_c(g[n]);
    });
}

sl_status sl_function_to_json(const sl_function *f, char **json)
{
    return guarded([&] {
        need(f, "function");
        need(json, "json");
        *json = dup_string(nlohmann::json(f->f).dump());
    });
}

sl_status sl_q_eval(double lam, sl_complex z, sl_complex *out)
{
    return guarded([&] {
        need(out, "out");
        *out = to_c(q_eval(SpiralParams(lam), to_cpp(z)));
    });
}

sl_status sl_spiral_contains(double lam, sl_complex w, double tol, int *inside)
{
    return guarded([&] {
        need(inside, "inside");
        if (!(tol >= 0.0))
            throw Error(ErrorCode::InvalidArgument, "tol must be >= 0");
        *inside = contains(SpiralParams(lam), to_cpp(w), tol) ? 1 : 0;
    });
}

sl_status sl_check(const sl_function *f, const char *check, double lam, double delta, char **report_json, int *pass)
{
    return guarded([&] {
        need(f, "function");
        need(check, "check");
        const auto r = run_check(f->f, check, lam, delta, Tolerances::from_environment());
        if (pass)
            *pass = r.pass ? 1 : 0;
        if (report_json)
            *report_json = dup_string(nlohmann::json(r).dump());
    });
}

sl_status sl_li2(double x, double *out)
{
    return guarded([&] {
        need(out, "out");
        *out = li2(x);
    });
}

sl_status sl_run_command(const char *config_json, char **output, int *exit_code)
{
    return guarded([&] {
        need(config_json, "config");
        const auto config = parse_config(nlohmann::json::parse(config_json));
        const auto res = run(config, Tolerances::from_environment());
        if (exit_code)
            *exit_code = res.exit_code;
        if (output)
            *output = dup_string(res.output);
    });
}

} // extern "C"
