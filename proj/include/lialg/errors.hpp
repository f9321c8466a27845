// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace lialg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct RankError : Error {
    using Error::Error;
};

struct BadParameter : Error {
    using Error::Error;
};

struct NotMaximalRank : Error {
    using Error::Error;
};

struct EmptyCohomology : Error {
    using Error::Error;
};

struct PreconditionFailed : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct NotACocycle : Error {
    using Error::Error;
};

struct IsACoboundary : Error {
    using Error::Error;
};

// Input-file errors carry the offending line (1-based, 0 = not line specific).
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct DuplicateWeight : ParseError {
    using ParseError::ParseError;
};

struct DuplicateBracket : ParseError {
    using ParseError::ParseError;
};

struct UnknownWeight : ParseError {
    using ParseError::ParseError;
};

struct NonRational : ParseError {
    using ParseError::ParseError;
};

}  // namespace lialg
