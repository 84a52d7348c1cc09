#pragma once

#include <stdexcept>
#include <string>

namespace mcx {

enum class ErrorCode {
    InvalidArgument,
    Parse,
    UnknownId,
    DuplicateId,
    SelfLoop,
    DanglingEndpoint,
    Precondition,
    Budget,
    NotSimple,
    Malformed,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

const char* error_code_name(ErrorCode code);

} // namespace mcx
