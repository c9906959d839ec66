#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Malformed or out-of-domain input supplied by a caller.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two operands live in permutation groups of different windows.
class WindowMismatch : public DomainError {
public:
    WindowMismatch(int a, int b)
        : DomainError("window mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// A mathematical invariant the engine relies on was violated. Always a bug
/// or a broken convention, never a recoverable condition.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An explicit resource guard (word count, degree cap, ambient cap) tripped.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace schubert
