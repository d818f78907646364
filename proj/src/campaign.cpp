#include "spirallog/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "format.hpp"
#include "spirallog/bounds.hpp"
#include "spirallog/error.hpp"
#include "spirallog/membership.hpp"
#include "spirallog/spiral.hpp"
#include "spirallog/zoo.hpp"

namespace spirallog {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kMaxSeeds = 1000000;
constexpr int kMaxOrder = 4096;
constexpr int kMapRays = 36;
constexpr int kMapRayPoints = 48;

[[noreturn]] void bad(const std::string &what) { throw Error(ErrorCode::InvalidArgument, what); }

void require_lambda(double lam)
{
    if (!(lam > 0.0 && lam <= 1.0))
        bad("lambda out of (0,1]");
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Runs job(i) for i in [0, count) on a small pool; results keep index order.
template <class Job>
auto parallel_indexed(int count, unsigned workers, Job job) -> std::vector<decltype(job(0))>
{
    std::vector<decltype(job(0))> out(static_cast<std::size_t>(std::max(count, 0)));
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max(count, 1)));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                out[static_cast<std::size_t>(i)] = job(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = count;
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

std::vector<BoundReport> flatten(std::vector<std::vector<BoundReport>> parts)
{
    std::vector<BoundReport> all;
    for (auto &p : parts)
        for (auto &r : p)
            all.push_back(std::move(r));
    return all;
}

BoundReport as_negative_control(BoundReport r)
{
    r.negative_control = true;
    return r;
}

EvaluationGrid grid_of(const RunConfig &c) { return EvaluationGrid::with_rmax(c.grid_rmax, c.grid_angles); }

int grid_order(const RunConfig &c, const Tolerances &tol)
{
    return std::max(c.order, grid_of(c).required_order(tol.grid_tail));
}

std::uint64_t seed_at(const RunConfig &c, int i) { return c.base_seed + static_cast<std::uint64_t>(i); }

NormalizedFunction sample_member(Family fam, double lam, std::uint64_t seed, int order)
{
    const auto omega = schwarz_sample(seed, sample_degree(seed), order);
    switch (fam) {
    case Family::StSs: return member_st_ss(lam, omega);
    case Family::G: return member_G(lam, omega);
    case Family::N: return member_N(lam, omega);
    default: break;
    }
    bad(std::string("family ") + to_string(fam) + " has no sampler");
}

Family sweep_family(const RunConfig &c)
{
    const Family fam = parse_family(c.family);
    if (fam == Family::Convex || fam == Family::Starlike)
        bad(std::string("family ") + to_string(fam) + " has no sampler; use ST_SS, G or N");
    return fam;
}

// Coefficient-level checks that `verify` runs for every member.
std::vector<BoundReport> family_checks(const NormalizedFunction &f, Family fam, double lam, const Tolerances &tol)
{
    switch (fam) {
    case Family::G:
        return {gamma_conjecture_G(f, lam, tol), gamma_sums_G(f, lam, tol),
                coefficient_bounds(f, {Family::G, lam}, 16, tol)};
    case Family::N: return {coefficient_bounds(f, {Family::N, lam}, 16, tol)};
    case Family::StSs:
        return {gamma_bounds_st_ss(f, lam, tol), hankel_check(f, lam, tol), fekete_szego_check(f, lam, 1.0, tol)};
    default: break;
    }
    return {};
}

// Grid checks; f must carry grid_order terms.
std::vector<BoundReport> grid_checks(const NormalizedFunction &f, Family fam, double lam, const EvaluationGrid &grid,
                                     const Tolerances &tol)
{
    std::vector<BoundReport> out{verify_condition(f, {fam, lam}, grid, tol)};
    std::vector<double> radii(grid.radii().begin(), grid.radii().end());
    if (fam == Family::G) {
        out.push_back(growth_envelopes(f, {fam, lam}, radii, grid.angles_per_ring(), tol));
        out.push_back(check_f_over_z_subordination(f, lam, grid, tol));
    } else if (fam == Family::N) {
        out.push_back(growth_envelopes(f, {fam, lam}, radii, grid.angles_per_ring(), tol));
    }
    return out;
}

std::vector<double> delta_grid(double lam, int count)
{
    const double lo = 3.0 * (lam - 1.0) / (4.0 * lam);
    const double hi = (1.0 + 3.0 * lam) / (4.0 * lam);
    const double a = lo - 1.0;
    const double b = hi + 1.0;
    std::vector<double> d(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        d[static_cast<std::size_t>(i)] = count == 1 ? 1.0 : a + (b - a) * i / (count - 1);
    return d;
}

// All Fekete-Szego and z/f entries of one function over a delta list.
BoundReport fs_sweep_report(const NormalizedFunction &f, double lam, const std::vector<double> &deltas,
                            const Tolerances &tol)
{
    ReportBuilder b("fekete_szego_sweep", lam, f.label(), tol);
    for (const double d : deltas) {
        const auto direct = fekete_szego_check(f, lam, d, tol).entries.front();
        const auto inverse = inverse_functional_check(f, lam, d, tol).entries.front();
        const std::string at = "@delta=" + detail::format_number(d);
        b.add("fs" + at, direct.value, direct.bound);
        b.add("inverse" + at, inverse.value, inverse.bound);
    }
    return b.build();
}

std::vector<BoundReport> cmd_gamma_reports(const RunConfig &c, const Tolerances &tol)
{
    const Family fam = sweep_family(c);
    if (fam != Family::G && fam != Family::StSs)
        bad("gamma: family must be G or ST_SS");
    auto reports = flatten(parallel_indexed(c.seeds, c.workers, [&](int i) {
        const auto f = sample_member(fam, c.lam, seed_at(c, i), c.order);
        if (fam == Family::G)
            return std::vector<BoundReport>{gamma_conjecture_G(f, c.lam, tol), gamma_sums_G(f, c.lam, tol)};
        return std::vector<BoundReport>{gamma_bounds_st_ss(f, c.lam, tol)};
    }));
    if (fam == Family::G) {
        for (int n = 1; n <= 10; ++n)
            reports.push_back(gamma_conjecture_G(extremal_G(c.lam, n, std::max(c.order, 4 * n + 4)), c.lam, tol));
    } else {
        for (int n = 1; n <= 8; ++n)
            reports.push_back(gamma_bounds_st_ss(extremal_F(c.lam, 1, n, std::max(c.order, 4 * n + 4)), c.lam, tol));
    }
    if (c.include_negative_controls) {
        const auto k = koebe(0.0, c.order);
        reports.push_back(as_negative_control(fam == Family::G ? gamma_conjecture_G(k, c.lam, tol)
                                                               : gamma_bounds_st_ss(k, c.lam, tol)));
    }
    return reports;
}

void require_st_ss(const RunConfig &c, const char *cmd)
{
    if (!c.family.empty() && parse_family(c.family) != Family::StSs)
        bad(std::string(cmd) + ": only ST_SS is supported");
}

std::vector<BoundReport> cmd_hankel_reports(const RunConfig &c, const Tolerances &tol)
{
    require_st_ss(c, "hankel");
    auto reports = flatten(parallel_indexed(c.seeds, c.workers, [&](int i) {
        return std::vector<BoundReport>{hankel_check(sample_member(Family::StSs, c.lam, seed_at(c, i), c.order), c.lam, tol)};
    }));
    reports.push_back(hankel_check(extremal_F(c.lam, 1, 2, c.order), c.lam, tol));
    if (c.include_negative_controls)
        reports.push_back(as_negative_control(hankel_check(koebe(0.0, c.order), c.lam, tol)));
    return reports;
}

std::vector<BoundReport> cmd_fs_reports(const RunConfig &c, const Tolerances &tol)
{
    require_st_ss(c, "fs");
    const auto deltas = delta_grid(c.lam, c.delta_count);
    auto reports = flatten(parallel_indexed(c.seeds, c.workers, [&](int i) {
        return std::vector<BoundReport>{
            fs_sweep_report(sample_member(Family::StSs, c.lam, seed_at(c, i), c.order), c.lam, deltas, tol)};
    }));
    std::vector<double> mid, outer;
    for (const double d : deltas)
        (fekete_szego_bound(c.lam, d).branch == FeketeSzegoBranch::Branch::Mid ? mid : outer).push_back(d);
    if (!mid.empty())
        reports.push_back(fs_sweep_report(extremal_F(c.lam, 1, 2, c.order), c.lam, mid, tol));
    if (!outer.empty())
        reports.push_back(fs_sweep_report(extremal_F(c.lam, 1, 1, c.order), c.lam, outer, tol));
    const double lo = 3.0 * (c.lam - 1.0) / (4.0 * c.lam);
    const double hi = (1.0 + 3.0 * c.lam) / (4.0 * c.lam);
    reports.push_back(fekete_szego_check(fekete_szego_pair(c.lam, 0.5, 1, c.order), c.lam, lo, tol));
    reports.push_back(fekete_szego_check(fekete_szego_pair(c.lam, 0.5, -1, c.order), c.lam, hi, tol));
    if (c.include_negative_controls)
        reports.push_back(as_negative_control(fs_sweep_report(koebe(0.0, c.order), c.lam, deltas, tol)));
    return reports;
}

std::string format_pair(Complex w)
{
    return detail::format_number(w.real()) + "," + detail::format_number(w.imag());
}

std::string points_csv(const std::vector<Complex> &pts)
{
    std::string s = "re,im\n";
    for (const auto &p : pts)
        s += format_pair(p) + "\n";
    return s;
}

json points_json(const std::vector<Complex> &pts)
{
    auto a = json::array();
    for (const auto &p : pts)
        a.push_back({p.real(), p.imag()});
    return a;
}

json grid_json(const RunConfig &c)
{
    const auto g = grid_of(c);
    return {{"r_max", g.r_max()},
            {"angles_per_ring", g.angles_per_ring()},
            {"radii", std::vector<double>(g.radii().begin(), g.radii().end())}};
}

json run_header(const RunConfig &c, const Tolerances &tol)
{
    return {{"schema_version", kSchemaVersion},
            {"command", to_string(c.command)},
            {"lambda", c.lam},
            {"family", c.family},
            {"base_seed", c.base_seed},
            {"seeds", c.seeds},
            {"order", c.order},
            {"grid", grid_json(c)},
            {"tolerance", {{"pass", tol.pass}, {"attainment", tol.attainment}}},
            {"generated_at", utc_timestamp()}};
}

std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

RunResult finish_reports(const RunConfig &c, const Tolerances &tol, const std::vector<BoundReport> &reports)
{
    int passed = 0, failed = 0, attained = 0, negatives = 0;
    auto violations = json::array();
    for (const auto &r : reports) {
        (r.pass ? passed : failed)++;
        attained += r.attained ? 1 : 0;
        negatives += r.negative_control ? 1 : 0;
        if (!r.pass)
            violations.push_back({{"check", r.check_name},
                                  {"subject", r.subject},
                                  {"negative_control", r.negative_control},
                                  {"margin", r.aggregate.margin}});
    }
    RunResult res;
    res.exit_code = failed > 0 ? 1 : 0;
    if (c.format == OutputFormat::Csv) {
        std::string s = "check,subject,negative_control,n,quantity,r,value,bound,margin,pass\n";
        for (const auto &r : reports)
            for (const auto &e : r.entries) {
                const bool ok = e.margin >= -tol.pass;
                s += csv_escape(r.check_name) + "," + csv_escape(r.subject) + "," +
                     (r.negative_control ? "true" : "false") + "," + std::to_string(e.n) + "," +
                     csv_escape(e.quantity) + "," + (e.r ? detail::format_number(*e.r) : "") + "," +
                     detail::format_number(e.value) + "," + detail::format_number(e.bound) + "," +
                     detail::format_number(e.margin) + "," + (ok ? "true" : "false") + "\n";
            }
        res.output = std::move(s);
        return res;
    }
    json doc = run_header(c, tol);
    doc["reports"] = reports;
    doc["summary"] = {{"total", reports.size()},      {"passed", passed},
                      {"failed", failed},             {"attained", attained},
                      {"negative_controls", negatives}, {"violations", std::move(violations)}};
    res.output = doc.dump(2) + "\n";
    return res;
}

RunResult cmd_boundary(const RunConfig &c)
{
    const SpiralParams params(c.lam);
    std::vector<Complex> pts;
    for (const auto &b : boundary_points(params, c.count))
        pts.push_back(b.w());
    std::vector<Complex> image;
    if (c.with_image) {
        const auto g = grid_of(c);
        for (std::size_t i = 0; i < g.radii().size(); ++i)
            for (int j = 0; j < g.angles_per_ring(); ++j)
                image.push_back(q_eval(params, g.point(i, j)));
    }
    RunResult res;
    if (c.format == OutputFormat::Csv) {
        auto all = pts;
        all.insert(all.end(), image.begin(), image.end());
        res.output = points_csv(all);
    } else {
        json doc = {{"schema_version", kSchemaVersion}, {"command", "boundary"}, {"lambda", c.lam},
                    {"boundary", points_json(pts)}};
        if (c.with_image)
            doc["image"] = points_json(image);
        res.output = doc.dump(2) + "\n";
    }
    return res;
}

TruncatedSeries map_series(const RunConfig &c, int order)
{
    const std::string &fn = c.function;
    auto g_f = [&] {
        return c.n == 1 ? closed_form_G_F(c.lam, order) : transform_G(extremal_F(c.lam, 1, c.n, order));
    };
    if (fn == "identity")
        return TruncatedSeries::identity(order);
    if (fn == "N_F")
        return extremal_N(c.lam, 1, c.n, order).series();
    if (fn == "G_F")
        return g_f().series();
    if (fn == "G_F_over_z")
        return g_f().series().over_z();
    if (fn == "log_G_F_over_z")
        return log1(g_f().series().over_z());
    if (fn == "q_lambda_zn")
        return pow_real(TruncatedSeries::monomial(1.0, c.n, order) + 1.0, c.lam);
    bad("map: unknown function '" + fn + "' (N_F, G_F, G_F_over_z, log_G_F_over_z, q_lambda_zn, identity)");
}

RunResult cmd_map(const RunConfig &c, const Tolerances &tol)
{
    const auto grid = grid_of(c);
    const auto s = map_series(c, grid_order(c, tol));
    std::vector<Complex> circles, rays;
    for (const double r : grid.radii())
        for (const Complex &w : evaluate_ring(s, r, grid.angles_per_ring()))
            circles.push_back(w);
    for (int k = 0; k < kMapRays; ++k)
        for (int j = 0; j <= kMapRayPoints; ++j)
            rays.push_back(evaluate(s, std::polar(grid.r_max() * j / kMapRayPoints,
                                                  2.0 * std::numbers::pi * k / kMapRays)));
    RunResult res;
    if (c.format == OutputFormat::Csv) {
        auto all = circles;
        all.insert(all.end(), rays.begin(), rays.end());
        res.output = points_csv(all);
    } else {
        json doc = {{"schema_version", kSchemaVersion},
                    {"command", "map"},
                    {"lambda", c.lam},
                    {"function", c.function},
                    {"n", c.n},
                    {"circles", points_json(circles)},
                    {"rays", points_json(rays)}};
        res.output = doc.dump(2) + "\n";
    }
    return res;
}

void write_output(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
    out << text;
    if (!out.flush())
        throw Error(ErrorCode::Io, "failed writing '" + path + "'");
}

template <class T>
T get_or(const json &j, const char *key, T fallback)
{
    if (!j.contains(key) || j.at(key).is_null())
        return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &) {
        bad(std::string("config: '") + key + "' has the wrong type");
    }
}

} // namespace

Command parse_command(const std::string &name)
{
    if (name == "verify") return Command::Verify;
    if (name == "gamma") return Command::Gamma;
    if (name == "hankel") return Command::Hankel;
    if (name == "fs") return Command::Fs;
    if (name == "boundary") return Command::Boundary;
    if (name == "map") return Command::Map;
    if (name == "report") return Command::Report;
    bad("unknown command '" + name + "'");
}

const char *to_string(Command c) noexcept
{
    switch (c) {
    case Command::Verify: return "verify";
    case Command::Gamma: return "gamma";
    case Command::Hankel: return "hankel";
    case Command::Fs: return "fs";
    case Command::Boundary: return "boundary";
    case Command::Map: return "map";
    case Command::Report: return "report";
    }
    return "?";
}

RunConfig parse_config(const json &j)
{
    if (!j.is_object())
        bad("config must be a JSON object");
    static const char *known[] = {"command", "lambda", "family", "seeds", "base_seed", "order", "grid_rmax",
                                  "grid_angles", "out", "format", "include_negative_controls", "membership",
                                  "count", "with_image", "function", "n", "input_dir", "delta_count", "workers"};
    for (const auto &item : j.items())
        if (std::find_if(std::begin(known), std::end(known), [&](const char *k) { return item.key() == k; }) ==
            std::end(known))
            bad("config: unknown key '" + item.key() + "'");

    RunConfig c;
    c.command = parse_command(get_or<std::string>(j, "command", "verify"));
    c.lam = get_or<double>(j, "lambda", c.lam);
    c.family = get_or<std::string>(j, "family", "");
    c.seeds = get_or<int>(j, "seeds", c.seeds);
    c.base_seed = get_or<std::uint64_t>(j, "base_seed", c.base_seed);
    c.order = get_or<int>(j, "order", c.order);
    c.grid_rmax = get_or<double>(j, "grid_rmax", c.grid_rmax);
    c.grid_angles = get_or<int>(j, "grid_angles", c.grid_angles);
    c.output_path = get_or<std::string>(j, "out", "");
    c.include_negative_controls = get_or<bool>(j, "include_negative_controls", false);
    c.membership = get_or<bool>(j, "membership", false);
    c.count = get_or<int>(j, "count", c.count);
    c.with_image = get_or<bool>(j, "with_image", true);
    c.function = get_or<std::string>(j, "function", c.function);
    c.n = get_or<int>(j, "n", c.n);
    c.input_dir = get_or<std::string>(j, "input_dir", "");
    c.delta_count = get_or<int>(j, "delta_count", c.delta_count);
    c.workers = get_or<unsigned>(j, "workers", 0u);

    const bool points = c.command == Command::Boundary || c.command == Command::Map;
    const std::string fmt = get_or<std::string>(j, "format", points ? "csv" : "json");
    if (fmt == "json")
        c.format = OutputFormat::Json;
    else if (fmt == "csv")
        c.format = OutputFormat::Csv;
    else
        bad("format must be json or csv");

    if (c.command == Command::Report) {
        if (c.input_dir.empty())
            bad("report: input_dir is required");
        return c;
    }
    require_lambda(c.lam);
    if (c.seeds < 0 || c.seeds > kMaxSeeds)
        bad("seeds must lie in 0.." + std::to_string(kMaxSeeds));
    if (c.order < 8 || c.order > kMaxOrder)
        bad("order must lie in 8.." + std::to_string(kMaxOrder));
    if (!(c.grid_rmax > 0.0 && c.grid_rmax < 1.0))
        bad("grid_rmax must lie in (0,1)");
    if (c.grid_angles < 4 || c.grid_angles > 100000)
        bad("grid_angles must lie in 4..100000");
    if (c.count < 2)
        bad("count must be >= 2");
    if (c.n < 1 || c.n > 64)
        bad("n must lie in 1..64");
    if (c.delta_count < 1 || c.delta_count > 10000)
        bad("delta_count must lie in 1..10000");
    if (c.command == Command::Verify && c.family.empty())
        c.family = "G";
    if (c.command == Command::Gamma && c.family.empty())
        c.family = "G";
    if ((c.command == Command::Hankel || c.command == Command::Fs) && c.family.empty())
        c.family = "ST_SS";
    if (!c.family.empty())
        c.family = to_string(parse_family(c.family));
    return c;
}

std::vector<BoundReport> verify_sweep(const RunConfig &c, const Tolerances &tol)
{
    const Family fam = sweep_family(c);
    const auto grid = grid_of(c);
    const int fine = c.membership ? grid_order(c, tol) : c.order;
    auto reports = flatten(parallel_indexed(c.seeds, c.workers, [&](int i) {
        const auto f = sample_member(fam, c.lam, seed_at(c, i), c.order);
        auto out = family_checks(f, fam, c.lam, tol);
        if (c.membership) {
            auto more = grid_checks(sample_member(fam, c.lam, seed_at(c, i), fine), fam, c.lam, grid, tol);
            out.insert(out.end(), more.begin(), more.end());
        }
        return out;
    }));
    if (c.include_negative_controls) {
        for (auto &r : family_checks(koebe(0.0, c.order), fam, c.lam, tol))
            reports.push_back(as_negative_control(std::move(r)));
        if (c.membership)
            reports.push_back(as_negative_control(verify_condition(koebe(0.0, fine), {fam, c.lam}, grid, tol)));
    }
    return reports;
}

json aggregate_reports(const std::string &dir)
{
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw Error(ErrorCode::MissingArtifacts, "report: '" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir, ec))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    json lam = nullptr, family = nullptr;
    bool mixed_lam = false, mixed_family = false;
    int runs = 0, total = 0, passed = 0, failed = 0, attained = 0;
    json worst = json::object();
    auto table = json::array();
    for (const auto &path : files) {
        std::ifstream in(path);
        json doc;
        try {
            in >> doc;
        } catch (const json::exception &) {
            continue; // not a run document
        }
        if (!doc.is_object() || !doc.contains("reports") || !doc.at("reports").is_array())
            continue;
        ++runs;
        const json l = doc.value("lambda", json(nullptr));
        const json f = doc.value("family", json(nullptr));
        if (runs == 1) {
            lam = l;
            family = f;
        } else {
            mixed_lam = mixed_lam || l != lam;
            mixed_family = mixed_family || f != family;
        }
        for (const auto &rj : doc.at("reports")) {
            BoundReport r;
            try {
                r = rj.get<BoundReport>();
            } catch (const json::exception &e) {
                throw Error(ErrorCode::MissingArtifacts, "report: malformed entry in '" + path.string() + "'");
            }
            ++total;
            (r.pass ? passed : failed)++;
            attained += r.attained ? 1 : 0;
            auto &w = worst[r.check_name];
            if (w.is_null() || r.aggregate.margin < w.at("margin").get<double>()) {
                w = json{{"margin", r.aggregate.margin},
                         {"value", r.aggregate.value},
                         {"bound", r.aggregate.bound},
                         {"subject", r.subject},
                         {"run", path.filename().string()}};
                if (r.aggregate.quantity.empty())
                    w["n"] = r.aggregate.n;
                else
                    w["quantity"] = r.aggregate.quantity;
            }
            if (r.attained)
                for (const auto &e : r.entries)
                    if (e.attained) {
                        json row = {{"check", r.check_name}, {"witness", r.subject}};
                        if (e.quantity.empty())
                            row["n"] = e.n;
                        else
                            row["quantity"] = e.quantity;
                        table.push_back(std::move(row));
                    }
        }
    }
    if (runs == 0)
        throw Error(ErrorCode::MissingArtifacts, "report: no run documents in '" + dir + "'");
    return {{"schema_version", kSchemaVersion},
            {"command", "report"},
            {"lambda", mixed_lam ? json("mixed") : lam},
            {"family", mixed_family ? json("mixed") : family},
            {"runs", runs},
            {"totals", {{"total", total}, {"passed", passed}, {"failed", failed}, {"attained", attained}}},
            {"worst_margins", worst},
            {"attainment_table", table}};
}

RunResult run(const RunConfig &c, const Tolerances &tol)
{
    RunResult res;
    switch (c.command) {
    case Command::Verify: res = finish_reports(c, tol, verify_sweep(c, tol)); break;
    case Command::Gamma: res = finish_reports(c, tol, cmd_gamma_reports(c, tol)); break;
    case Command::Hankel: res = finish_reports(c, tol, cmd_hankel_reports(c, tol)); break;
    case Command::Fs: res = finish_reports(c, tol, cmd_fs_reports(c, tol)); break;
    case Command::Boundary: res = cmd_boundary(c); break;
    case Command::Map: res = cmd_map(c, tol); break;
    case Command::Report: {
        const json summary = aggregate_reports(c.input_dir);
        res.exit_code = summary.at("totals").at("failed").get<int>() > 0 ? 1 : 0;
        res.output = summary.dump(2) + "\n";
        break;
    }
    }
    if (!c.output_path.empty())
        write_output(c.output_path, res.output);
    return res;
}

} // namespace spirallog
