#pragma once

#include <cstdint>

#include "cvx/polygon.hpp"

namespace cvx {

/// SplitMix64. Fixed as the repository's generator: seeds are part of the
/// external contract, and instance streams must be reproducible across
/// runs and thread counts.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

/// Independent stream for one instance: the root sequence advanced to the
/// given index, so workers can draw instances in any order.
SplitMix64 instance_rng(std::uint64_t seed, std::uint64_t index);

enum class GenMode { Mixed, ConvexOnly, HypThm15, HypThm16, HypThm17 };

struct FuzzConfig {
    std::uint64_t seed = 0;
    std::uint64_t instances = 1;
    int n_min = 3;
    int n_max = 8;
    std::int64_t coord_range = 20;  // coordinates drawn from [-R, R]
    GenMode mode = GenMode::Mixed;
    bool relax_endpoints = false;
};

/// Throws PreconditionViolated when the configuration cannot produce valid
/// instances (instances = 0, n_min < 3, coord range too small for n_max
/// distinct x-values, ...).
void validate(const FuzzConfig& cfg);

/// Deterministic instance for (cfg.seed, index). Mixed mode draws integer
/// coordinates from [-R, R]; convex-only and the hypothesis modes build
/// coordinates constructively from difference lists so the target property
/// holds by construction (their y-values may leave [-R, R]).
PointSeq generate_instance(const FuzzConfig& cfg, std::uint64_t index);

}  // namespace cvx
