#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dw/clusters.hpp"
#include "dw/types.hpp"

namespace dw {

enum class Outcome { split, shrink, complete };

const char* outcome_name(Outcome o);
Outcome outcome_from_name(const std::string& name);

// A certified pair sequence for the controlled protocol. `cluster` lists the
// members the split/shrink claim refers to (empty for `complete`), so the
// artifact is verifiable standalone.
struct ControlSequence {
    OpinionState start_state;
    std::vector<AgentPair> pairs;
    Outcome claimed_outcome = Outcome::complete;
    std::int64_t length_bound = 0;
    std::vector<int> cluster;
};

struct VerifyReport {
    bool ok = false;
    std::string reason;
    explicit operator bool() const { return ok; }
};

// Minimal k >= 0 with (1-mu)^k * den <= num, i.e. ceil(log_{1-mu}(num/den))
// clamped at zero, evaluated by multiply-compare so no float-log off-by-one
// can creep into the ceilings. Requires mu in [1/2,1), num > 0, den > 0.
std::int64_t ceil_log_one_minus_mu(double mu, double num, double den);

// (1-mu)^2 * r_min, the guaranteed diameter decrement. Kept as the single
// definition so synthesis and verification compare against identical doubles.
double shrink_delta(double mu, double r_min);

// (|C|-1)^2 * (1 + ceil(log_{1-mu}(r_min/r_max))).
std::int64_t split_or_shrink_length_bound(int cluster_size, double mu, double r_min, double r_max);

// (n-1)^2 * (1 + ceil(log_{1-mu}(r_n/r_1))) * ceil((1-r_n)/((1-mu)^2 r_n)).
std::int64_t drive_length_bound(int n, double mu, double r1, double rn);

// Synthesizes a pair sequence that either splits the given cluster into
// several clusters of the final state or reduces its diameter by at least
// shrink_delta(mu, r_min). Requires mu in [1/2,1) and diameter > r_min.
ControlSequence split_or_shrink(const OpinionState& x, const MCCluster& cluster,
                                const ModelParams& params);

// Repeatedly applies split_or_shrink to the first incomplete cluster until
// every cluster is complete (lyapunov_F = 0).
ControlSequence drive_to_complete(const OpinionState& x, const ModelParams& params);

// Replays the sequence and checks the claimed outcome and the length bound.
VerifyReport verify_outcome(const ControlSequence& seq, const ModelParams& params);

// a^floor(t/(t*+1)) with a = 1 - (2/(n(n-1)))^{t*}, in log space. Upper
// bound on P(tau >= t) for the first time a controlled-reachable set is hit
// under the random protocol.
double hitting_tail_bound(std::int64_t t, std::int64_t t_star, int n);

}  // namespace dw
