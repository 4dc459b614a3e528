#pragma once

#include <stdexcept>
#include <string>

namespace tdho {

// Mirrors tdho_status in the C header; keep the numeric values in sync.
enum class ErrorCode : int {
    invalid_argument = 1,
    domain = 2,
    integration_failure = 3,
    no_instantaneous_vacuum = 4,
    decomposition = 5,
    unsupported_kind = 6,
    insufficient_data = 7,
    invalid_params = 8,
    below_ground_state = 9,
    imaginary_order = 10,
    asymptotic_regime = 11,
    phase_aliasing = 12,
    io = 13,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace tdho
