#pragma once

#include <stdexcept>
#include <string>

namespace rouquier {

/// Raised when caller-supplied data violates a documented precondition.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (e.g. a block partition
/// that should be stable under a group action is not). Always a bug upstream.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InvariantError(msg);
}

}  // namespace rouquier
