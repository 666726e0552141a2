#pragma once

#include <cstdint>

namespace cardoracle {

/// SplitMix64 output finalizer (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

/// SplitMix64 stream. Cheap to construct, so one stream per Monte Carlo trial
/// keyed by (seed, trial index) keeps results independent of scheduling.
class SplitMix64 {
  public:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    constexpr explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// Stream for trial `index` of a run seeded with `seed`.
    static constexpr SplitMix64 for_trial(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(mix64(seed ^ mix64(index + kGamma)));
    }

    constexpr std::uint64_t operator()() {
        state_ += kGamma;
        return mix64(state_);
    }

    /// Uniform in [0, bound) by multiply-shift; bias is at most bound / 2^64.
    constexpr std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>((*this)()) * bound) >> 64U);
    }

  private:
    std::uint64_t state_;
};

} // namespace cardoracle
