#pragma once

#include <stdexcept>
#include <string>

namespace spccache {

// Parameter outside the domain an operation accepts (q < 2, non-integer t, ...).
struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed pick list for a block-intersection query.
struct InvalidPicks : std::invalid_argument {
    explicit InvalidPicks(const std::string& what) : std::invalid_argument(what) {}
};

// Inputs that are individually valid but do not belong together
// (scheme/design mismatch, corpus built for a different subpacketization, ...).
struct InconsistentInput : std::invalid_argument {
    explicit InconsistentInput(const std::string& what) : std::invalid_argument(what) {}
};

// File I/O failure or unparseable/inconsistent scheme file.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spccache
