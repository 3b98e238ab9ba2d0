#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace genie {

// Error taxonomy shared by the C++ core and the C API status codes.
enum class ErrorCode {
    invalid_argument = 1, // bad parameter values (k out of range, g <= 0, ...)
    config = 2,           // incompatible configuration (metric vs dataset kind)
    parse = 3,            // malformed input file
    io = 4,               // unreadable/missing file
    resource = 5,         // over a configured resource cap
    undefined_score = 6,  // score mathematically undefined for the input
    internal = 7,         // broken invariant; indicates a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace genie
