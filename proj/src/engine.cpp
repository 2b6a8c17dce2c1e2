#include "dw/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dw {

ConfidenceProfile::ConfidenceProfile(std::vector<double> bounds) : bounds_(std::move(bounds)) {
    if (bounds_.empty()) throw parameter_error("confidence bounds must be non-empty");
    for (std::size_t k = 0; k < bounds_.size(); ++k) {
        if (!(bounds_[k] > 0.0) || !std::isfinite(bounds_[k])) {
            throw parameter_error("confidence bound for agent " + std::to_string(k + 1) +
                                  " must be strictly positive and finite");
        }
    }
    order_.resize(bounds_.size());
    std::iota(order_.begin(), order_.end(), 1);
    std::stable_sort(order_.begin(), order_.end(),
                     [this](int a, int b) { return bound(a) > bound(b); });
    rank_.resize(bounds_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) {
        rank_[static_cast<std::size_t>(order_[k] - 1)] = static_cast<int>(k + 1);
    }
}

ModelParams::ModelParams(int n_, double mu_, ConfidenceProfile confidence_)
    : n(n_), mu(mu_), confidence(std::move(confidence_)) {
    if (n < 3) throw parameter_error("agent count must be at least 3");
    if (!(mu > 0.0 && mu < 1.0)) throw parameter_error("weighting factor must lie in (0,1)");
    if (confidence.size() != n) {
        throw parameter_error("confidence profile has " + std::to_string(confidence.size()) +
                              " bounds, expected " + std::to_string(n));
    }
}

void validate_state(const OpinionState& state, int n) {
    if (static_cast<int>(state.x.size()) != n) {
        throw state_domain_error("state has " + std::to_string(state.x.size()) +
                                 " components, expected " + std::to_string(n));
    }
    for (std::size_t k = 0; k < state.x.size(); ++k) {
        const double v = state.x[k];
        if (!(v >= 0.0 && v <= 1.0)) {
            throw state_domain_error("opinion x_" + std::to_string(k + 1) + " = " +
                                     std::to_string(v) + " lies outside [0,1]");
        }
    }
}

AgentPair::AgentPair(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
    if (a == b) throw invalid_pair_error("pair must reference two distinct agents");
    if (i < 1) throw invalid_pair_error("agent indices are 1-based");
}

void validate_pair(const AgentPair& pair, int n) {
    if (pair.i < 1 || pair.j > n || pair.i >= pair.j) {
        throw invalid_pair_error("pair {" + std::to_string(pair.i) + "," + std::to_string(pair.j) +
                                 "} invalid for n = " + std::to_string(n));
    }
}

OpinionState dw_step(const OpinionState& x, const AgentPair& pair, const ModelParams& params) {
    validate_pair(pair, params.n);
    OpinionState out = x;
    update_pair_in_place(out.x, pair.i, pair.j, params.mu, params.confidence.bound(pair.i),
                         params.confidence.bound(pair.j));
    out.t = x.t + 1;
    return out;
}

AgentPair sample_pair(SplitMix64& rng, int n) {
    if (n < 3) throw parameter_error("pair sampling needs at least 3 agents");
    const std::uint64_t m = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t k = rng.below(m);

    // Lexicographic unranking: first index a (0-based) owns ranks
    // [off(a), off(a) + n-1-a) with off(a) = a(2n-a-1)/2.
    auto off = [n](std::uint64_t a) { return a * (2ull * n - a - 1) / 2; };
    const double disc = static_cast<double>((2ull * n - 1) * (2ull * n - 1) - 8ull * k);
    std::uint64_t a = static_cast<std::uint64_t>(
        std::max(0.0, (static_cast<double>(2 * n - 1) - std::sqrt(disc)) / 2.0));
    while (a + 1 < static_cast<std::uint64_t>(n) && off(a + 1) <= k) ++a;
    while (a > 0 && off(a) > k) --a;

    const int i = static_cast<int>(a) + 1;
    const int j = i + 1 + static_cast<int>(k - off(a));
    return AgentPair(i, j);
}

Trace simulate(const OpinionState& x0, const ModelParams& params, std::int64_t steps,
               std::uint64_t seed, const SimulateOptions& options) {
    validate_state(x0, params.n);
    if (steps < 0) throw parameter_error("step count must be non-negative");
    if (options.thinning < 1) throw parameter_error("thinning stride must be at least 1");

    if (options.memory_cap_bytes != 0) {
        const std::uint64_t recorded = static_cast<std::uint64_t>(steps / options.thinning) + 1;
        const std::uint64_t predicted =
            recorded * (static_cast<std::uint64_t>(params.n) * sizeof(double) + sizeof(OpinionState)) +
            static_cast<std::uint64_t>(steps) * sizeof(AgentPair);
        if (predicted > options.memory_cap_bytes) {
            throw parameter_error("predicted trace size " + std::to_string(predicted) +
                                  " bytes exceeds cap " + std::to_string(options.memory_cap_bytes) +
                                  "; increase thinning or the cap");
        }
    }

    Trace trace{params, seed, options.thinning, {}, {}};
    trace.states.reserve(static_cast<std::size_t>(steps / options.thinning) + 1);
    trace.pairs.reserve(static_cast<std::size_t>(steps));

    OpinionState state = x0;
    state.t = 0;
    trace.states.push_back(state);

    SplitMix64 rng(seed);
    for (std::int64_t step = 0; step < steps; ++step) {
        const AgentPair pair = sample_pair(rng, params.n);
        update_pair_in_place(state.x, pair.i, pair.j, params.mu, params.confidence.bound(pair.i),
                             params.confidence.bound(pair.j));
        state.t = step + 1;
        trace.pairs.push_back(pair);
        if (state.t % options.thinning == 0) trace.states.push_back(state);
    }
    return trace;
}

OpinionState apply_sequence(const OpinionState& x0, std::span<const AgentPair> seq,
                            const ModelParams& params) {
    validate_state(x0, params.n);
    OpinionState state = x0;
    for (const AgentPair& pair : seq) {
        validate_pair(pair, params.n);
        update_pair_in_place(state.x, pair.i, pair.j, params.mu, params.confidence.bound(pair.i),
                             params.confidence.bound(pair.j));
        ++state.t;
    }
    return state;
}

}  // namespace dw
