#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace k3 {

// Precondition failures and malformed input. Maps to CLI exit code 2.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation that could not be certified within its resource caps.
// Never converted into a negative answer. Maps to CLI exit code 3.
struct Undecided : std::runtime_error {
    Undecided(const std::string& what, uint64_t prime = 0)
        : std::runtime_error(what), prime(prime) {}
    uint64_t prime;  // offending prime, 0 if not prime-specific
};

// Inputs outside the hypotheses under which a constructive answer is known.
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-item wall-clock budget exhausted.
struct Timeout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace k3
