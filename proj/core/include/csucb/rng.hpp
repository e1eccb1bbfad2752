#pragma once

#include <cstdint>

namespace csucb {

// Deterministic 64-bit generators used everywhere in the library. We avoid
// <random> distributions on purpose: their output is implementation-defined,
// and experiment traces must be reproducible from a seed alone.
//
// Stream layout:
//   run_seed(master, r)  -- independent seed for replicate run r
//   substream(seed, tag) -- disjoint stream for one purpose (availability,
//                           feedback, oracle noise, ...) inside a run
//   splitmix_at(seed, i) -- i-th output of the stream, O(1) random access
//
// Counter-indexed access makes the availability/feedback draw for a given
// (run, t, arm) a pure function of the master seed: adding runs or changing
// what the policy pulls never perturbs other draws.

constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t splitmix_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// i-th output of the splitmix64 sequence started at `seed`.
inline std::uint64_t splitmix_at(std::uint64_t seed, std::uint64_t index) {
    return splitmix_finalize(seed + (index + 1) * kSplitMixGamma);
}

// Seed for replicate run `run_index`, derived from the master seed.
inline std::uint64_t run_seed(std::uint64_t master_seed, std::uint64_t run_index) {
    return splitmix_finalize(master_seed ^ splitmix_at(0x5EED5EED5EED5EEDULL, run_index));
}

// Disjoint purpose-tagged stream within one seed.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t tag) {
    return splitmix_finalize(seed ^ splitmix_finalize(tag * kSplitMixGamma + 0xD1B54A32D192ED03ULL));
}

inline double u64_to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Sequential stream with the usual sampling helpers.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += kSplitMixGamma;
        return splitmix_finalize(state_);
    }

    // Uniform double in [0, 1).
    double next_unit() { return u64_to_unit(next_u64()); }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    bool next_bernoulli(double p) { return next_unit() < p; }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection-free modulo is fine here: n is tiny relative to 2^64.
        return next_u64() % n;
    }

private:
    std::uint64_t state_;
};

}  // namespace csucb
