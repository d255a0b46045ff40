#pragma once

#include <stdexcept>
#include <string>

namespace gabor {

// Error vocabulary shared by all modules. Everything derives from
// std::runtime_error so callers can catch broadly or by condition.

struct IncompatibleGrids : std::runtime_error {
    explicit IncompatibleGrids(const std::string& what) : std::runtime_error(what) {}
};

struct SupportTruncation : std::runtime_error {
    explicit SupportTruncation(const std::string& what) : std::runtime_error(what) {}
};

struct NotAFrame : std::runtime_error {
    explicit NotAFrame(const std::string& what) : std::runtime_error(what) {}
};

struct SingularBlock : std::runtime_error {
    explicit SingularBlock(const std::string& what) : std::runtime_error(what) {}
};

struct IterationLimit : std::runtime_error {
    explicit IterationLimit(const std::string& what) : std::runtime_error(what) {}
};

// Frame-operator inversion stalled; carries the estimated extreme
// eigenvalues so the caller can see the conditioning.
struct ConditioningError : std::runtime_error {
    double a_est;
    double b_est;
    ConditioningError(const std::string& what, double a, double b)
        : std::runtime_error(what), a_est(a), b_est(b) {}
};

struct PhaseUnavailable : std::runtime_error {
    explicit PhaseUnavailable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gabor
