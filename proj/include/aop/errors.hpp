// aopsynth: error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace aop {

/// Thrown when an instance exceeds a hard structural limit, for example more
/// inputs than fit into the 64-bit subset masks used throughout the engine.
class UnsupportedSizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when the optional wall-clock budget (environment variable
/// AOP_TIME_BUDGET_SECS) runs out during a solve.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace aop
