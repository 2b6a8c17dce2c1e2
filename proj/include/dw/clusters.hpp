#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dw/types.hpp"

namespace dw {

// One maximal-confidence cluster. Members are 1-based agent ids sorted
// ascending; the anchor is the seed agent of the construction stage.
struct MCCluster {
    std::vector<int> members;
    int anchor = 0;
    double r_min = 0.0;
    double r_max = 0.0;
    double x_min = 0.0;
    double x_max = 0.0;
};

struct MCPartition {
    std::vector<MCCluster> clusters;  // construction order
    std::int64_t state_time = 0;

    // 0-based index of the cluster containing `agent`, or -1.
    int cluster_of(int agent) const;
};

// Reusable workspace for the partition construction. The hot loops in the
// experiments module call compute() per step without reallocating; the
// public mc_partition() wraps the same core, so there is a single
// implementation of the construction.
class PartitionScratch {
public:
    // `order` lists agent ids ascending by opinion (ties by id).
    void compute(std::span<const int> order, const std::vector<double>& x,
                 const ConfidenceProfile& conf);

    int cluster_count() const { return count_; }
    int cluster_index(int agent) const { return cluster_of_[static_cast<std::size_t>(agent - 1)]; }
    int anchor(int c) const { return anchor_[static_cast<std::size_t>(c)]; }
    double x_min(int c) const { return xmin_[static_cast<std::size_t>(c)]; }
    double x_max(int c) const { return xmax_[static_cast<std::size_t>(c)]; }
    double r_min(int c) const { return rmin_[static_cast<std::size_t>(c)]; }
    double r_max(int c) const { return rmax_[static_cast<std::size_t>(c)]; }
    int size(int c) const { return size_[static_cast<std::size_t>(c)]; }
    bool complete(int c) const {
        const std::size_t k = static_cast<std::size_t>(c);
        return xmax_[k] - xmin_[k] <= rmin_[k];
    }
    bool all_complete() const;
    double lyapunov() const;  // sum of incomplete-cluster diameters

private:
    int count_ = 0;
    std::vector<int> cluster_of_;
    std::vector<int> anchor_;
    std::vector<double> xmin_, xmax_, rmin_, rmax_;
    std::vector<int> size_;
    std::vector<int> next_, prev_;
};

// The iterative construction: seed with the largest-bound agent (canonical
// ties by original index), close reachability under its bound over the
// remaining agents, remove, repeat.
MCPartition mc_partition(const OpinionState& x, const ConfidenceProfile& confidence);

// True iff max pairwise opinion distance within the cluster is at most the
// minimum confidence bound among its members.
bool is_complete(const MCCluster& cluster, const OpinionState& x);

double cluster_diameter(const MCCluster& cluster, const OpinionState& x);

// F = sum over clusters of (0 if complete else diameter). Zero exactly when
// every cluster is complete; otherwise it exceeds the smallest bound.
double lyapunov_F(const MCPartition& partition, const OpinionState& x);

// Inter-cluster gap check: every pair of clusters must be separated by more
// than the largest bound over both member sets (strict >).
bool verify_gap(const MCPartition& partition, const OpinionState& x,
                const ConfidenceProfile& confidence);

// Hull confinement along a trace: members of any cluster computed at a
// recorded time never leave [x_min, x_max] of that cluster at later recorded
// times. With thinning > 1 the check applies at recorded granularity only.
bool verify_convexity(const Trace& trace);

}  // namespace dw
