#ifndef SPIRALLOG_FORMAT_HPP
#define SPIRALLOG_FORMAT_HPP

#include <charconv>
#include <string>

namespace spirallog::detail {

// Shortest round-trip form, independent of the C locale.
inline std::string format_number(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace spirallog::detail

#endif
