#pragma once

#include <cstdint>
#include <vector>

#include "dw/errors.hpp"

namespace dw {

// Per-agent confidence bounds in user order, plus the canonical descending
// ordering (ties broken by smaller original index). Agent ids are 1-based
// throughout the public surface.
class ConfidenceProfile {
public:
    explicit ConfidenceProfile(std::vector<double> bounds);

    int size() const { return static_cast<int>(bounds_.size()); }
    double bound(int agent) const { return bounds_[static_cast<std::size_t>(agent - 1)]; }
    const std::vector<double>& bounds() const { return bounds_; }

    // canonical_order()[k] = agent id holding the (k+1)-th largest bound.
    const std::vector<int>& canonical_order() const { return order_; }
    // 1-based rank of an agent in the canonical ordering.
    int canonical_rank(int agent) const { return rank_[static_cast<std::size_t>(agent - 1)]; }

    double largest() const { return bound(order_.front()); }   // r_1 in canonical terms
    double smallest() const { return bound(order_.back()); }   // r_n in canonical terms

private:
    std::vector<double> bounds_;
    std::vector<int> order_;
    std::vector<int> rank_;
};

struct ModelParams {
    int n;
    double mu;
    ConfidenceProfile confidence;

    ModelParams(int n_, double mu_, ConfidenceProfile confidence_);
};

// Opinion vector at a time index. x[a-1] is agent a's opinion.
struct OpinionState {
    std::int64_t t = 0;
    std::vector<double> x;

    double opinion(int agent) const { return x[static_cast<std::size_t>(agent - 1)]; }
};

// Throws state_domain_error unless x has n components all inside [0,1].
void validate_state(const OpinionState& state, int n);

// Unordered agent pair stored with i < j.
struct AgentPair {
    int i;
    int j;

    AgentPair(int a, int b);

    bool operator==(const AgentPair& other) const = default;
};

// Checks 1 <= i < j <= n; throws invalid_pair_error otherwise.
void validate_pair(const AgentPair& pair, int n);

// A recorded simulation run. `states` holds every `thinning`-th state
// starting at t = 0; `pairs` is the full pair log, pairs[k] applied at time
// k. Replaying the pair log from states[0] reproduces every recorded state
// bit-exactly.
struct Trace {
    ModelParams params;
    std::uint64_t seed = 0;
    std::int64_t thinning = 1;
    std::vector<OpinionState> states;
    std::vector<AgentPair> pairs;
};

}  // namespace dw
