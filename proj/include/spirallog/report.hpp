#ifndef SPIRALLOG_REPORT_HPP
#define SPIRALLOG_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "spirallog/tolerances.hpp"

namespace spirallog {

enum class Sense {
    Upper, // value <= bound
    Lower, // value >= bound
};

/// One compared quantity. `n` is the coefficient index for per-index
/// checks; `quantity` names the item for sums, envelopes and grid rings.
struct BoundEntry {
    int n = 0;
    std::string quantity;
    std::optional<double> r;
    double value = 0;
    double bound = 0;
    Sense sense = Sense::Upper;
    double margin = 0;
    bool attained = false;
};

/// Per-inequality verdicts. pass <=> every margin >= -tolerance;
/// attained => pass.
struct BoundReport {
    std::string check_name;
    double lam = 0;
    std::string subject;
    bool negative_control = false;
    std::vector<BoundEntry> entries;
    BoundEntry aggregate; // the entry with the smallest margin
    bool pass = true;
    bool attained = false;
    double tail_slack = 0;
    std::string note;
};

/// Collects entries and derives margins, the worst-case aggregate and the
/// pass/attained flags in one place.
class ReportBuilder {
public:
    ReportBuilder(std::string check_name, double lam, std::string subject, const Tolerances &tol);

    ReportBuilder &add(int n, double value, double bound, Sense sense = Sense::Upper);
    ReportBuilder &add(std::string quantity, double value, double bound, Sense sense = Sense::Upper,
                       std::optional<double> r = std::nullopt);
    ReportBuilder &tail_slack(double slack);
    /// Marks the report failed regardless of margins (e.g. a grid point where
    /// the defining expression cannot be evaluated).
    ReportBuilder &fail(std::string note);
    ReportBuilder &note(std::string note);

    BoundReport build() const;

private:
    BoundEntry make_entry(double value, double bound, Sense sense) const;

    BoundReport report_;
    Tolerances tol_;
    bool forced_failure_ = false;
};

void to_json(nlohmann::json &j, const BoundEntry &e);
void to_json(nlohmann::json &j, const BoundReport &r);
void from_json(const nlohmann::json &j, BoundEntry &e);
void from_json(const nlohmann::json &j, BoundReport &r);

} // namespace spirallog

#endif
