#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dw/rng.hpp"
#include "dw/types.hpp"

namespace dw {

// One protocol step on a working vector. d = x_j - x_i is computed once;
// agent i moves by mu*d iff |d| <= r_i, agent j by -mu*d iff |d| <= r_j.
// Comparisons are non-strict on IEEE doubles with no epsilon. Every test
// oracle that freezes expected values replicates exactly this arithmetic.
inline void update_pair_in_place(std::vector<double>& x, int i, int j, double mu,
                                 double r_i, double r_j) {
    double& xi = x[static_cast<std::size_t>(i - 1)];
    double& xj = x[static_cast<std::size_t>(j - 1)];
    const double d = xj - xi;
    const double gap = d < 0 ? -d : d;
    if (gap <= r_i) xi += mu * d;
    if (gap <= r_j) xj -= mu * d;
}

// Single pair update. Returns the state at t+1; the input is not modified.
OpinionState dw_step(const OpinionState& x, const AgentPair& pair, const ModelParams& params);

// Uniform draw from the n(n-1)/2 unordered pairs via triangular unranking
// of one bounded uniform integer.
AgentPair sample_pair(SplitMix64& rng, int n);

struct SimulateOptions {
    std::int64_t thinning = 1;
    // Predicted trace footprint above this cap raises parameter_error and
    // points the caller at thinning. 0 disables the guard.
    std::uint64_t memory_cap_bytes = 512ull << 20;
};

// Seeded trajectory: iterates sample_pair + the update for `steps` steps,
// recording every `thinning`-th state plus the full pair log.
Trace simulate(const OpinionState& x0, const ModelParams& params, std::int64_t steps,
               std::uint64_t seed, const SimulateOptions& options = {});

// Folds the update over a given pair sequence (the controlled trajectory).
OpinionState apply_sequence(const OpinionState& x0, std::span<const AgentPair> seq,
                            const ModelParams& params);

}  // namespace dw
