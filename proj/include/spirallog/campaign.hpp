#ifndef SPIRALLOG_CAMPAIGN_HPP
#define SPIRALLOG_CAMPAIGN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "spirallog/report.hpp"
#include "spirallog/tolerances.hpp"

namespace spirallog {

enum class Command { Verify, Gamma, Hankel, Fs, Boundary, Map, Report };
enum class OutputFormat { Json, Csv };

Command parse_command(const std::string &name);
const char *to_string(Command c) noexcept;

struct RunConfig {
    Command command = Command::Verify;
    double lam = 0.5;
    std::string family = "G";
    int seeds = 10;
    std::uint64_t base_seed = 1;
    int order = kDefaultOrder;
    double grid_rmax = 0.95;
    int grid_angles = 720;
    std::string output_path; // empty: result only returned
    OutputFormat format = OutputFormat::Json;

    bool include_negative_controls = false;
    bool membership = false; // verify: add grid checks
    int count = 1001;        // boundary: number of spiral points
    bool with_image = true;  // boundary: append the grid image of q
    std::string function = "G_F";
    int n = 1;               // map: index for N_F and q_lambda_zn
    std::string input_dir;   // report
    int delta_count = 50;    // fs
    unsigned workers = 0;    // 0: hardware concurrency
};

/// Reads a config object (keys as in RunConfig, snake_case, lambda as
/// "lambda", output_path as "out"). Unknown keys and out-of-range values
/// throw InvalidArgument; an unknown family throws UnknownFamily.
RunConfig parse_config(const nlohmann::json &j);

struct RunResult {
    int exit_code = 0;  // 0 all pass, 1 some bound violated
    std::string output; // JSON document or CSV text
};

/// Runs one command; writes `output` to config.output_path when set.
/// Config and I/O problems are thrown as Error.
RunResult run(const RunConfig &config, const Tolerances &tol);

/// The seeded members and checks behind `verify`, without serialization.
std::vector<BoundReport> verify_sweep(const RunConfig &config, const Tolerances &tol);

/// Aggregates the run documents found in a directory.
nlohmann::json aggregate_reports(const std::string &dir);

} // namespace spirallog

#endif
