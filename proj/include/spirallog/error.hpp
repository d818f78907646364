#ifndef SPIRALLOG_ERROR_HPP
#define SPIRALLOG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spirallog {

enum class ErrorCode {
    InvalidArgument,
    NearZeroLeadingCoefficient,
    NotUnitConstantTerm,
    NonzeroConstantTerm,
    NonzeroInnerConstant,
    OutsideDisk,
    DivisionBySmallCoefficient,
    UnknownFamily,
    MissingArtifacts,
    Io,
};

const char *to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace spirallog

#endif
