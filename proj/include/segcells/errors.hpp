#pragma once

#include <stdexcept>
#include <string>

namespace segcells {

// Every failure the library can produce maps to one of these classes.
// The CLI turns them into process exit codes; see exit_code().
enum class ErrorCode {
    Parse,         // malformed input file or bad CLI parameters
    Params,        // invalid generator/command parameters
    Overlap,       // two collinear segments share more than one point
    Degenerate,    // query point on a segment, polyline vertex issues, etc.
    BadPolygon,    // polygon orientation/containment/restricted-validity violated
    SameCell,      // separation requested but a and b share a cell
    NotAWalk,      // consecutive walk segments do not intersect
    Precondition,  // other violated precondition (triple points, a/b placement)
    TooLarge,      // instance exceeds a solver guard
    TooManyHoles,  // polygon hole count exceeds the guard
    Internal,      // internal consistency check failed
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::Parse: return "E_PARSE";
        case ErrorCode::Params: return "E_PARAMS";
        case ErrorCode::Overlap: return "E_OVERLAP";
        case ErrorCode::Degenerate: return "E_DEGENERATE";
        case ErrorCode::BadPolygon: return "E_BAD_POLYGON";
        case ErrorCode::SameCell: return "E_SAME_CELL";
        case ErrorCode::NotAWalk: return "E_NOT_A_WALK";
        case ErrorCode::Precondition: return "E_PRECONDITION";
        case ErrorCode::TooLarge: return "E_TOO_LARGE";
        case ErrorCode::TooManyHoles: return "E_TOO_MANY_HOLES";
        case ErrorCode::Internal: return "E_INTERNAL";
    }
    return "E_UNKNOWN";
}

// 0 is success and 1 is reserved for "verification failed" in the CLI.
inline int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::Parse:
        case ErrorCode::Params: return 2;
        case ErrorCode::Degenerate: return 3;
        case ErrorCode::Overlap:
        case ErrorCode::BadPolygon:
        case ErrorCode::SameCell:
        case ErrorCode::NotAWalk:
        case ErrorCode::Precondition: return 4;
        case ErrorCode::TooLarge:
        case ErrorCode::TooManyHoles: return 5;
        case ErrorCode::Internal: return 6;
    }
    return 6;
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, ErrorCode code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace segcells
