#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spirallog/spirallog.h"

namespace {

struct Options {
    double lambda = 0;
    std::string family;
    int seeds = 0;
    std::uint64_t base_seed = 0;
    int order = 0;
    double grid_rmax = 0;
    int grid_angles = 0;
    std::string out;
    std::string format;
    int count = 0;
    std::string function;
    int n = 0;
    std::string in;
    int delta_count = 0;
    unsigned workers = 0;
    bool negative_controls = false;
    bool membership = false;
    bool no_image = false;
};

// Options given on the command line are copied into the config after parsing,
// so everything left out falls back to the library defaults.
std::vector<std::function<void()>> appliers;

template <class T>
CLI::Option *opt(CLI::App *cmd, const std::string &flag, T &field, const std::string &key, nlohmann::json &config,
                 const std::string &help)
{
    CLI::Option *o = cmd->add_option(flag, field, help);
    appliers.push_back([o, &field, &config, key] {
        if (o->count() > 0)
            config[key] = field;
    });
    return o;
}

void flag(CLI::App *cmd, const std::string &name, bool &field, const std::string &key, nlohmann::json &config,
          const std::string &help, bool value = true)
{
    CLI::Option *o = cmd->add_flag(name, field, help);
    appliers.push_back([o, &config, key, value] {
        if (o->count() > 0)
            config[key] = value;
    });
}

void common_sweep_options(CLI::App *cmd, Options &o, nlohmann::json &config)
{
    opt(cmd, "--lambda", o.lambda, "lambda", config, "lambda in (0,1]");
    opt(cmd, "--seeds", o.seeds, "seeds", config, "number of seeded members");
    opt(cmd, "--base-seed", o.base_seed, "base_seed", config, "seed of the first member");
    opt(cmd, "--order", o.order, "order", config, "truncation order");
    opt(cmd, "--grid-rmax", o.grid_rmax, "grid_rmax", config, "largest grid radius");
    opt(cmd, "--grid-angles", o.grid_angles, "grid_angles", config, "points per grid ring");
    opt(cmd, "--out", o.out, "out", config, "output file (default: stdout)");
    opt(cmd, "--format", o.format, "format", config, "json or csv");
    opt(cmd, "--workers", o.workers, "workers", config, "worker threads (0: all cores)");
    flag(cmd, "--include-negative-controls", o.negative_controls, "include_negative_controls", config,
         "add Koebe as a negative control");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Truncated-series checks for spiral-like function families"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sl_version()));

    Options o;
    nlohmann::json config = nlohmann::json::object();

    auto *verify = app.add_subcommand("verify", "seeded family sweep with every coefficient check");
    common_sweep_options(verify, o, config);
    opt(verify, "--family", o.family, "family", config, "ST_SS, G or N");
    flag(verify, "--membership", o.membership, "membership", config, "also run the grid membership checks");

    auto *gamma = app.add_subcommand("gamma", "logarithmic coefficient bounds and their extremals");
    common_sweep_options(gamma, o, config);
    opt(gamma, "--family", o.family, "family", config, "G or ST_SS");

    auto *hankel = app.add_subcommand("hankel", "second Hankel determinant in ST_SS");
    common_sweep_options(hankel, o, config);

    auto *fs = app.add_subcommand("fs", "Fekete-Szego and z/f functionals over a delta grid");
    common_sweep_options(fs, o, config);
    opt(fs, "--delta-count", o.delta_count, "delta_count", config, "number of delta values");

    auto *boundary = app.add_subcommand("boundary", "points of the spiral boundary as re,im rows");
    opt(boundary, "--lambda", o.lambda, "lambda", config, "lambda in (0,1]");
    opt(boundary, "--count", o.count, "count", config, "number of boundary points");
    opt(boundary, "--grid-rmax", o.grid_rmax, "grid_rmax", config, "largest grid radius");
    opt(boundary, "--grid-angles", o.grid_angles, "grid_angles", config, "points per grid ring");
    opt(boundary, "--out", o.out, "out", config, "output file (default: stdout)");
    opt(boundary, "--format", o.format, "format", config, "csv or json");
    flag(boundary, "--no-image", o.no_image, "with_image", config, "boundary curve only, without the grid image of q",
         false);

    auto *map = app.add_subcommand("map", "images of circles and rays under a named map");
    opt(map, "--lambda", o.lambda, "lambda", config, "lambda in (0,1]");
    opt(map, "--function", o.function, "function", config,
        "N_F, G_F, G_F_over_z, log_G_F_over_z, q_lambda_zn or identity");
    opt(map, "--n", o.n, "n", config, "index n of the extremal");
    opt(map, "--grid-rmax", o.grid_rmax, "grid_rmax", config, "largest grid radius");
    opt(map, "--grid-angles", o.grid_angles, "grid_angles", config, "points per grid ring");
    opt(map, "--out", o.out, "out", config, "output file (default: stdout)");
    opt(map, "--format", o.format, "format", config, "csv or json");

    auto *report = app.add_subcommand("report", "aggregate run documents in a directory");
    opt(report, "--in", o.in, "input_dir", config, "directory of run JSON files")->required();
    opt(report, "--out", o.out, "out", config, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }
    for (const auto &apply : appliers)
        apply();
    config["command"] = app.get_subcommands().front()->get_name();

    char *output = nullptr;
    int exit_code = 0;
    const sl_status st = sl_run_command(config.dump().c_str(), &output, &exit_code);
    if (st != SL_OK) {
        std::cerr << "error: " << sl_last_error_message() << " (" << sl_status_name(st) << ")\n";
        return 2;
    }
    const std::string text = output ? output : "";
    sl_string_free(output);

    if (o.out.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        const auto doc = nlohmann::json::parse(text, nullptr, false);
        if (!doc.is_discarded() && doc.contains("summary")) {
            const auto &s = doc["summary"];
            std::cout << config["command"].get<std::string>() << ": " << s["passed"] << "/" << s["total"]
                      << " reports pass, " << s["attained"] << " attained -> " << o.out << "\n";
        } else {
            std::cout << "wrote " << o.out << "\n";
        }
    }
    if (exit_code != 0)
        std::cerr << "bound violated (see report)\n";
    return exit_code;
}
