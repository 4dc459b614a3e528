#include "tdho/error.hpp"

namespace tdho {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::domain: return "domain error";
    case ErrorCode::integration_failure: return "integration failure";
    case ErrorCode::no_instantaneous_vacuum: return "no instantaneous vacuum";
    case ErrorCode::decomposition: return "decomposition error";
    case ErrorCode::unsupported_kind: return "unsupported oscillator kind";
    case ErrorCode::insufficient_data: return "insufficient data";
    case ErrorCode::invalid_params: return "invalid squeeze parameters";
    case ErrorCode::below_ground_state: return "energy below ground state";
    case ErrorCode::imaginary_order: return "imaginary Hankel order unsupported";
    case ErrorCode::asymptotic_regime: return "outside asymptotic regime";
    case ErrorCode::phase_aliasing: return "phase aliasing";
    case ErrorCode::io: return "I/O error";
    }
    return "unknown error";
}

}  // namespace tdho
