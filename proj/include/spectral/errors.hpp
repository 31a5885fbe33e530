#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectral {

enum class InvalidReason {
    BaseTooSmall,      // N < 2
    CofactorTooSmall,  // R < 2
    NotCoprime,        // gcd(R, N) != 1
    ExponentTooSmall,  // q < 1
    NotIncreasing,     // p not strictly increasing
    FirstNotPositive,  // p_1 <= 0
    LastNotBelowQ,     // p_s >= q
    TooManyDigits,     // N^(s+1) above the configured digit guard
};

inline const char* reason_message(InvalidReason r) {
    switch (r) {
        case InvalidReason::BaseTooSmall: return "N must be at least 2";
        case InvalidReason::CofactorTooSmall: return "R must be at least 2";
        case InvalidReason::NotCoprime: return "gcd(R,N) must be 1";
        case InvalidReason::ExponentTooSmall: return "q must be at least 1";
        case InvalidReason::NotIncreasing: return "p must be strictly increasing";
        case InvalidReason::FirstNotPositive: return "p_1 must be positive";
        case InvalidReason::LastNotBelowQ: return "p_s must be smaller than q";
        case InvalidReason::TooManyDigits: return "digit set exceeds the configured size guard";
    }
    return "invalid parameters";
}

class InvalidParameters : public std::invalid_argument {
public:
    explicit InvalidParameters(InvalidReason reason)
        : std::invalid_argument(reason_message(reason)), reason_(reason) {}

    InvalidReason reason() const noexcept { return reason_; }

private:
    InvalidReason reason_;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what_budget, std::size_t limit)
        : std::runtime_error(what_budget + " budget of " + std::to_string(limit) + " exceeded"),
          limit_(limit) {}

    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

class ZeroScaling : public std::invalid_argument {
public:
    ZeroScaling() : std::invalid_argument("scaling t must be nonzero") {}
};

class SizeMismatch : public std::invalid_argument {
public:
    SizeMismatch() : std::invalid_argument("digit sets must have equal size") {}
};

/// Resource limits shared by the enumeration routines.
struct Budgets {
    std::size_t elements = 1'000'000;  // spectrum truncations and block digit sets
    std::size_t nodes = 10'000'000;    // attractor candidate interval
    std::size_t words = 10'000'000;    // search nodes visited by the word oracle
};

}  // namespace spectral
