#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylrep {

// Caller mistakes: malformed input, mismatched preconditions.  The CLI maps
// these to exit code 2.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct VariableMismatch : UsageError {
    explicit VariableMismatch(const std::string& what) : UsageError(what) {}
};

struct ParseError : UsageError {
    ParseError(const std::string& what, std::size_t pos)
        : UsageError(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct UnsupportedFactor : UsageError {
    explicit UnsupportedFactor(const std::string& what) : UsageError(what) {}
};

// Refusals and internal-consistency failures.  The CLI maps these to exit
// code 1.
struct ComputeError : std::runtime_error {
    explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvertible : ComputeError {
    explicit NotInvertible(const std::string& what) : ComputeError(what) {}
};

struct CapExceeded : ComputeError {
    CapExceeded(const std::string& estimate_str, unsigned long long cap_value)
        : ComputeError("Weyl group too large to enumerate: |W| = " + estimate_str +
                       " exceeds cap " + std::to_string(cap_value) +
                       "; set WEYL_ENUM_CAP to override"),
          estimate(estimate_str),
          cap(cap_value) {}
    std::string estimate;
    unsigned long long cap;
};

struct TruncationInsufficient : ComputeError {
    explicit TruncationInsufficient(const std::string& what) : ComputeError(what) {}
};

}  // namespace weylrep
