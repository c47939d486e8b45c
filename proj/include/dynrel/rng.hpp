#pragma once

#include <cstdint>

namespace dynrel {

/// Counter-based uniform stream: draw k of scenario s reads position
/// s * stride + k of one global splitmix64 sequence keyed by the seed.
/// Streams never overlap and depend only on (seed, scenario, draw index),
/// so any partitioning of scenarios across workers reproduces the same
/// draws bit for bit.
class ScenarioRng {
public:
    ScenarioRng(std::uint64_t seed, std::uint64_t scenario, std::uint32_t stride)
        : key_(finalize(seed)), counter_(scenario * stride) {}

    /// Next uniform draw, strictly inside (0,1).
    double next_u01() {
        const std::uint64_t bits = finalize(key_ + (counter_++) * kGolden);
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    static std::uint64_t finalize(std::uint64_t z) {
        z += kGolden;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace dynrel
