#pragma once

#include <stdexcept>
#include <string>

namespace fqa {

inline constexpr const char* kToolkitVersion = "0.1.0";

// File could not be read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input file exists but its contents are malformed. The message names the
// offending file and line where possible.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition on an operation's arguments was violated.
struct InvalidArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad command line or configuration; maps to exit status 2 in the CLI.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fqa
