#pragma once

#include <stdexcept>
#include <string>

namespace preproj {

// Values are mirrored by the pp_status codes of the C API.
enum class ErrorCode : int {
    DiagonalNotTwo = 1,
    PositivityViolation = 2,
    AsymmetricZeroPattern = 3,
    NoSymmetrizer = 4,
    NotASymmetrizer = 5,
    InvalidOrientation = 6,
    CapExceeded = 7,
    FieldDegenerate = 8,
    VerificationFailed = 9,
    NotDynkin = 10,
    SocleNotSimple = 11,
    RadicalUnavailable = 12,
    NotMutable = 13,
    ReportFailure = 14,
    ParseError = 15,
    ValidationError = 16,
    InvalidArgument = 17,
    Internal = 18,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace preproj
