#pragma once

#include <stdexcept>
#include <string>

namespace cotwist {

// Bad input from the caller: mismatched contexts, malformed expressions,
// invalid definition files.  Maps to CLI exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mathematically undefined request (exp of a series with nonzero constant
// term, inverse of a non-unit, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation exceeded a configured resource bound (PBW degree cap).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// An identity the engine guarantees by construction failed.  Signals a bug
// in the engine, never bad user input.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace cotwist
