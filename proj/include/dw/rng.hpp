#pragma once

#include <cstdint>

namespace dw {

// SplitMix64: counter-based 64-bit generator (Steele, Lea, Flood 2014).
// The state advances by a fixed odd gamma and each output is a finalizer of
// the counter, so jumping/substreaming is trivial and replay is exact on any
// platform. All randomness in this project flows through this generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0,1) with 53 random bits.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Unbiased uniform integer in [0, m), m >= 1. Lemire's multiply-shift
    // with the exact rejection threshold; expected rejections are ~m/2^64.
    std::uint64_t below(std::uint64_t m) {
        for (;;) {
            std::uint64_t x = next();
            __uint128_t prod = static_cast<__uint128_t>(x) * m;
            std::uint64_t low = static_cast<std::uint64_t>(prod);
            if (low < m) {
                std::uint64_t threshold = (0 - m) % m;
                if (low < threshold) continue;
            }
            return static_cast<std::uint64_t>(prod >> 64);
        }
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
}  // namespace detail

// Stream derivation: replica seed = hash(master, lane, index). Ensembles use
// lane = 0 and index = replica; sweeps use lane = grid-point index. Adding
// grid points or replicas never perturbs existing streams, and aggregation
// order cannot change per-replica results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t lane, std::uint64_t index) {
    std::uint64_t h = detail::mix64(master ^ 0xA0761D6478BD642Full);
    h = detail::mix64(h ^ (lane + 0xE7037ED1A0B428DBull));
    h = detail::mix64(h ^ (index + 0x8EBC6AF09C88C6E3ull));
    return h;
}

}  // namespace dw
