#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string_view>

#include "spirallog/error.hpp"
#include "spirallog/tolerances.hpp"

namespace spirallog {

const char *to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NearZeroLeadingCoefficient: return "NearZeroLeadingCoefficient";
    case ErrorCode::NotUnitConstantTerm: return "NotUnitConstantTerm";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::DivisionBySmallCoefficient: return "DivisionBySmallCoefficient";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::MissingArtifacts: return "MissingArtifacts";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

Tolerances Tolerances::from_environment()
{
    Tolerances tol;
    if (const char *env = std::getenv("SPIRALLOG_TOLERANCE"); env != nullptr && *env != '\0') {
        const std::string_view text(env);
        double v = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec == std::errc{} && end == text.data() + text.size() && std::isfinite(v) && v >= 0)
            tol.pass = v;
    }
    return tol;
}

} // namespace spirallog
