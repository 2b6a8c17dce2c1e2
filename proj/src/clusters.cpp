#include "dw/clusters.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "dw/engine.hpp"

namespace dw {

int MCPartition::cluster_of(int agent) const {
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        const auto& m = clusters[c].members;
        if (std::binary_search(m.begin(), m.end(), agent)) return static_cast<int>(c);
    }
    return -1;
}

void PartitionScratch::compute(std::span<const int> order, const std::vector<double>& x,
                               const ConfidenceProfile& conf) {
    const int n = static_cast<int>(order.size());
    cluster_of_.assign(static_cast<std::size_t>(n), -1);
    anchor_.clear();
    xmin_.clear();
    xmax_.clear();
    rmin_.clear();
    rmax_.clear();
    size_.clear();
    count_ = 0;

    // Circular doubly linked list over sorted positions with sentinel n.
    next_.resize(static_cast<std::size_t>(n) + 1);
    prev_.resize(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p < n; ++p) {
        next_[static_cast<std::size_t>(p)] = p + 1;
        prev_[static_cast<std::size_t>(p)] = p == 0 ? n : p - 1;
    }
    next_[static_cast<std::size_t>(n)] = 0;
    prev_[static_cast<std::size_t>(n)] = n - 1;

    auto opinion_at = [&](int p) { return x[static_cast<std::size_t>(order[static_cast<std::size_t>(p)] - 1)]; };

    int remaining = n;
    while (remaining > 0) {
        // Anchor: remaining agent with the smallest canonical rank, i.e. the
        // largest bound with ties broken by original index.
        int anchor_pos = -1;
        int best_rank = n + 1;
        for (int p = next_[static_cast<std::size_t>(n)]; p != n; p = next_[static_cast<std::size_t>(p)]) {
            const int rank = conf.canonical_rank(order[static_cast<std::size_t>(p)]);
            if (rank < best_rank) {
                best_rank = rank;
                anchor_pos = p;
            }
        }
        const int anchor_agent = order[static_cast<std::size_t>(anchor_pos)];
        const double r = conf.bound(anchor_agent);

        // Chain reachability on the line: extend through adjacent remaining
        // positions while the consecutive gap stays within the anchor bound.
        int lo = anchor_pos;
        while (prev_[static_cast<std::size_t>(lo)] != n) {
            const int q = prev_[static_cast<std::size_t>(lo)];
            if (opinion_at(lo) - opinion_at(q) <= r) lo = q; else break;
        }
        int hi = anchor_pos;
        while (next_[static_cast<std::size_t>(hi)] != n) {
            const int q = next_[static_cast<std::size_t>(hi)];
            if (opinion_at(q) - opinion_at(hi) <= r) hi = q; else break;
        }

        const int c = count_++;
        anchor_.push_back(anchor_agent);
        double rmin = r, rmax = r;
        int size = 0;
        for (int p = lo;; p = next_[static_cast<std::size_t>(p)]) {
            const int agent = order[static_cast<std::size_t>(p)];
            cluster_of_[static_cast<std::size_t>(agent - 1)] = c;
            rmin = std::min(rmin, conf.bound(agent));
            rmax = std::max(rmax, conf.bound(agent));
            ++size;
            if (p == hi) break;
        }
        xmin_.push_back(opinion_at(lo));
        xmax_.push_back(opinion_at(hi));
        rmin_.push_back(rmin);
        rmax_.push_back(rmax);
        size_.push_back(size);
        remaining -= size;

        // Unlink [lo, hi].
        const int before = prev_[static_cast<std::size_t>(lo)];
        const int after = next_[static_cast<std::size_t>(hi)];
        next_[static_cast<std::size_t>(before)] = after;
        prev_[static_cast<std::size_t>(after)] = before;
    }
}

bool PartitionScratch::all_complete() const {
    for (int c = 0; c < count_; ++c) {
        if (!complete(c)) return false;
    }
    return true;
}

double PartitionScratch::lyapunov() const {
    double f = 0.0;
    for (int c = 0; c < count_; ++c) {
        if (!complete(c)) f += x_max(c) - x_min(c);
    }
    return f;
}

namespace {

std::vector<int> opinion_order(const std::vector<double>& x) {
    std::vector<int> order(x.size());
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&x](int a, int b) {
        const double xa = x[static_cast<std::size_t>(a - 1)];
        const double xb = x[static_cast<std::size_t>(b - 1)];
        if (xa != xb) return xa < xb;
        return a < b;
    });
    return order;
}

}  // namespace

MCPartition mc_partition(const OpinionState& x, const ConfidenceProfile& confidence) {
    validate_state(x, confidence.size());
    const std::vector<int> order = opinion_order(x.x);
    PartitionScratch scratch;
    scratch.compute(order, x.x, confidence);

    MCPartition partition;
    partition.state_time = x.t;
    partition.clusters.resize(static_cast<std::size_t>(scratch.cluster_count()));
    for (int c = 0; c < scratch.cluster_count(); ++c) {
        MCCluster& cluster = partition.clusters[static_cast<std::size_t>(c)];
        cluster.anchor = scratch.anchor(c);
        cluster.r_min = scratch.r_min(c);
        cluster.r_max = scratch.r_max(c);
        cluster.x_min = scratch.x_min(c);
        cluster.x_max = scratch.x_max(c);
    }
    for (int agent = 1; agent <= confidence.size(); ++agent) {
        partition.clusters[static_cast<std::size_t>(scratch.cluster_index(agent))].members.push_back(agent);
    }
#ifndef NDEBUG
    assert(verify_gap(partition, x, confidence));
#endif
    return partition;
}

bool is_complete(const MCCluster& cluster, const OpinionState& x) {
    double lo = x.opinion(cluster.members.front());
    double hi = lo;
    double rmin = cluster.r_min;
    for (const int agent : cluster.members) {
        lo = std::min(lo, x.opinion(agent));
        hi = std::max(hi, x.opinion(agent));
    }
    return hi - lo <= rmin;
}

double cluster_diameter(const MCCluster& cluster, const OpinionState& x) {
    double lo = x.opinion(cluster.members.front());
    double hi = lo;
    for (const int agent : cluster.members) {
        lo = std::min(lo, x.opinion(agent));
        hi = std::max(hi, x.opinion(agent));
    }
    return hi - lo;
}

double lyapunov_F(const MCPartition& partition, const OpinionState& x) {
    double f = 0.0;
    for (const MCCluster& cluster : partition.clusters) {
        if (!is_complete(cluster, x)) f += cluster_diameter(cluster, x);
    }
    return f;
}

bool verify_gap(const MCPartition& partition, const OpinionState& x,
                const ConfidenceProfile& confidence) {
    const std::size_t k = partition.clusters.size();
    std::vector<double> lo(k), hi(k), rmax(k);
    for (std::size_t c = 0; c < k; ++c) {
        const MCCluster& cluster = partition.clusters[c];
        lo[c] = hi[c] = x.opinion(cluster.members.front());
        rmax[c] = 0.0;
        for (const int agent : cluster.members) {
            lo[c] = std::min(lo[c], x.opinion(agent));
            hi[c] = std::max(hi[c], x.opinion(agent));
            rmax[c] = std::max(rmax[c], confidence.bound(agent));
        }
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            const double bound = std::max(rmax[a], rmax[b]);
            const bool a_above = lo[a] - hi[b] > bound;
            const bool b_above = lo[b] - hi[a] > bound;
            if (!a_above && !b_above) return false;
        }
    }
    return true;
}

bool verify_convexity(const Trace& trace) {
    const std::size_t count = trace.states.size();
    if (count == 0) return true;
    const int n = trace.params.n;

    // Reverse sweep with per-agent running min/max over later recorded
    // states; a cluster's hull at time t must contain them all.
    std::vector<double> run_min(static_cast<std::size_t>(n)),
        run_max(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        run_min[static_cast<std::size_t>(a)] = trace.states.back().x[static_cast<std::size_t>(a)];
        run_max[static_cast<std::size_t>(a)] = run_min[static_cast<std::size_t>(a)];
    }
    for (std::size_t idx = count; idx-- > 0;) {
        const OpinionState& state = trace.states[idx];
        for (int a = 0; a < n; ++a) {
            run_min[static_cast<std::size_t>(a)] =
                std::min(run_min[static_cast<std::size_t>(a)], state.x[static_cast<std::size_t>(a)]);
            run_max[static_cast<std::size_t>(a)] =
                std::max(run_max[static_cast<std::size_t>(a)], state.x[static_cast<std::size_t>(a)]);
        }
        const MCPartition partition = mc_partition(state, trace.params.confidence);
        for (const MCCluster& cluster : partition.clusters) {
            for (const int agent : cluster.members) {
                if (run_min[static_cast<std::size_t>(agent - 1)] < cluster.x_min ||
                    run_max[static_cast<std::size_t>(agent - 1)] > cluster.x_max) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace dw
