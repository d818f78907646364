#include "spirallog/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spirallog {

ReportBuilder::ReportBuilder(std::string check_name, double lam, std::string subject, const Tolerances &tol)
    : tol_(tol)
{
    report_.check_name = std::move(check_name);
    report_.lam = lam;
    report_.subject = std::move(subject);
}

BoundEntry ReportBuilder::make_entry(double value, double bound, Sense sense) const
{
    BoundEntry e;
    e.value = value;
    e.bound = bound;
    e.sense = sense;
    e.margin = sense == Sense::Upper ? bound - value : value - bound;
    if (std::isnan(e.margin))
        e.margin = -std::numeric_limits<double>::infinity();
    e.attained = std::abs(e.margin) <= tol_.attainment;
    return e;
}

ReportBuilder &ReportBuilder::add(int n, double value, double bound, Sense sense)
{
    BoundEntry e = make_entry(value, bound, sense);
    e.n = n;
    report_.entries.push_back(std::move(e));
    return *this;
}

ReportBuilder &ReportBuilder::add(std::string quantity, double value, double bound, Sense sense, std::optional<double> r)
{
    BoundEntry e = make_entry(value, bound, sense);
    e.quantity = std::move(quantity);
    e.r = r;
    report_.entries.push_back(std::move(e));
    return *this;
}

ReportBuilder &ReportBuilder::tail_slack(double slack)
{
    report_.tail_slack = slack;
    return *this;
}

ReportBuilder &ReportBuilder::fail(std::string note)
{
    forced_failure_ = true;
    return this->note(std::move(note));
}

ReportBuilder &ReportBuilder::note(std::string note)
{
    if (!report_.note.empty())
        report_.note += "; ";
    report_.note += note;
    return *this;
}

BoundReport ReportBuilder::build() const
{
    BoundReport r = report_;
    if (!r.entries.empty()) {
        auto worst = std::min_element(r.entries.begin(), r.entries.end(),
                                      [](const BoundEntry &a, const BoundEntry &b) { return a.margin < b.margin; });
        r.aggregate = *worst;
    }
    r.pass = !forced_failure_ &&
             std::all_of(r.entries.begin(), r.entries.end(), [&](const BoundEntry &e) { return e.margin >= -tol_.pass; });
    r.attained = r.pass && std::any_of(r.entries.begin(), r.entries.end(), [](const BoundEntry &e) { return e.attained; });
    return r;
}

namespace {

// JSON has no infinities; margins of unevaluable points are written as null.
nlohmann::json number(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

double read_number(const nlohmann::json &j)
{
    return j.is_null() ? -std::numeric_limits<double>::infinity() : j.get<double>();
}

} // namespace

void to_json(nlohmann::json &j, const BoundEntry &e)
{
    j = nlohmann::json::object();
    if (e.quantity.empty())
        j["n"] = e.n;
    else
        j["quantity"] = e.quantity;
    if (e.r)
        j["r"] = *e.r;
    j["value"] = number(e.value);
    j["bound"] = number(e.bound);
    j["sense"] = e.sense == Sense::Upper ? "upper" : "lower";
    j["margin"] = number(e.margin);
    j["attained"] = e.attained;
}

void from_json(const nlohmann::json &j, BoundEntry &e)
{
    e = BoundEntry{};
    if (j.contains("n"))
        e.n = j.at("n").get<int>();
    if (j.contains("quantity"))
        e.quantity = j.at("quantity").get<std::string>();
    if (j.contains("r"))
        e.r = j.at("r").get<double>();
    e.value = read_number(j.at("value"));
    e.bound = read_number(j.at("bound"));
    e.sense = j.at("sense").get<std::string>() == "lower" ? Sense::Lower : Sense::Upper;
    e.margin = read_number(j.at("margin"));
    e.attained = j.at("attained").get<bool>();
}

void to_json(nlohmann::json &j, const BoundReport &r)
{
    j = nlohmann::json{
        {"check", r.check_name},
        {"lambda", r.lam},
        {"subject", r.subject},
        {"negative_control", r.negative_control},
        {"pass", r.pass},
        {"attained", r.attained},
        {"aggregate", r.aggregate},
        {"entries", r.entries},
        {"tail_slack", number(r.tail_slack)},
    };
    if (!r.note.empty())
        j["note"] = r.note;
}

void from_json(const nlohmann::json &j, BoundReport &r)
{
    r = BoundReport{};
    r.check_name = j.at("check").get<std::string>();
    r.lam = j.at("lambda").get<double>();
    r.subject = j.at("subject").get<std::string>();
    r.negative_control = j.value("negative_control", false);
    r.pass = j.at("pass").get<bool>();
    r.attained = j.at("attained").get<bool>();
    r.aggregate = j.at("aggregate").get<BoundEntry>();
    r.entries = j.at("entries").get<std::vector<BoundEntry>>();
    r.tail_slack = read_number(j.at("tail_slack"));
    r.note = j.value("note", std::string{});
}

} // namespace spirallog
