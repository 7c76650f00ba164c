#pragma once

#include <stdexcept>
#include <string>

namespace qst {

// Error categories; mirrored one-to-one by the qs_status codes of the C API.
enum class ErrorCode {
    InvalidArgument,
    Range,
    Parse,
    Stream,
    Checksum,
    State,
    Contract,
    Validation,
    NonConvergent,
    Io,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace qst
