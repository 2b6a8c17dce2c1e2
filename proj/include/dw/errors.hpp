#pragma once

#include <stdexcept>
#include <string>

namespace dw {

// Raised when a pair references out-of-range or identical agents.
struct invalid_pair_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised on invalid model parameters (n, mu, bounds, grids, sizes).
struct parameter_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an opinion state leaves the unit box [0,1]^n.
struct state_domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation that needs mu in [1/2, 1) is called outside it.
struct theorem_domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation's hypothesis does not hold (e.g. the target
// cluster diameter is not above its minimal bound).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the exact-expectation oracle when the enumeration would exceed
// the configured path budget. Carries the required path count.
struct budget_error : std::runtime_error {
    budget_error(const std::string& msg, unsigned long long required, unsigned long long budget)
        : std::runtime_error(msg), required_paths(required), budget_paths(budget) {}
    unsigned long long required_paths;
    unsigned long long budget_paths;
};

// Internal invariant violation during control-sequence synthesis. This is a
// bug trap, not an expected failure mode.
struct synthesis_error : std::logic_error {
    using std::logic_error::logic_error;
};

// File/stream failures in serialization helpers.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dw
