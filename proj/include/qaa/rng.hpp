// Copyright 2026 The qaa-maxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace qaa {

/// SplitMix64 finalizer. Bijective 64-bit mixing function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// Counter-based SplitMix64 stream: the k-th output (k = 1, 2, ...) is
/// mix64(seed + k * kGoldenGamma). Fixed forever; histograms depend on it.
class SplitMix64 {
   public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t operator()() noexcept {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    /// Uniform double in [0, 1) built from the top 53 bits.
    constexpr double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    static constexpr std::uint64_t min() noexcept { return 0; }
    static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

   private:
    std::uint64_t state_;
};

/// Independent random streams used by one measurement shot.
enum class ShotStream : std::uint64_t {
    kMeasure = 0,
    kGateNoise = 1,
    kReadout = 2,
};

/// Seed of stream `stream` for shot `shot_index` of a run with master seed
/// `master`:
///
///   shot_seed   = mix64(master ^ mix64(shot_index))
///   stream_seed = mix64(shot_seed + (stream + 1) * kGoldenGamma)
///
/// Every shot is therefore reproducible on its own, independent of how shots
/// are scheduled across threads.
constexpr std::uint64_t derive_shot_seed(std::uint64_t master, std::uint64_t shot_index,
                                         ShotStream stream) noexcept {
    const std::uint64_t shot_seed = mix64(master ^ mix64(shot_index));
    return mix64(shot_seed + (static_cast<std::uint64_t>(stream) + 1) * kGoldenGamma);
}

}  // namespace qaa
