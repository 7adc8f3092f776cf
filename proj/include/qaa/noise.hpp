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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qaa/graph.hpp"
#include "qaa/statevector.hpp"

namespace qaa {

/// Depolarizing gate noise plus symmetric readout error.
struct NoiseModel {
    /// Depolarizing probability after every RX.
    double p_1q = 0.0;
    /// Two-qubit depolarizing probability after every RZZ.
    double p_2q = 0.0;
    /// Independent flip probability of every measured bit.
    double p_ro = 0.0;

    bool is_noiseless() const noexcept { return p_1q == 0.0 && p_2q == 0.0 && p_ro == 0.0; }

    friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

/// Heron r3, best couplings.
inline constexpr NoiseModel kHeronR3Optimistic{1e-4, 2e-3, 8e-3};
/// Heron r2, median device performance.
inline constexpr NoiseModel kHeronR2Median{2e-4, 6e-3, 1.5e-2};

/// Throws InputError unless every probability lies in [0, 1].
void validate(const NoiseModel& noise);

/// Resolves `heron-r3-opt`, `heron-r2-med`, `none` or `custom:p1,p2,pro`.
/// Throws InputError for anything else.
NoiseModel parse_noise_preset(std::string_view name);

struct NoisyRunConfig {
    Graph graph;
    TrotterSchedule schedule;
    NoiseModel noise;
    std::uint64_t shots = 8192;
    std::uint64_t seed = 0;
};

/// Samples `shots` outcomes of a fixed state, then flips bit q of each outcome
/// when the q-th uniform of the shot's kReadout stream is below p_ro. Uses the
/// same per-shot streams as noisy_qaa_histogram, so a noisy run in which no
/// gate error fires matches this function shot by shot.
Histogram sample_with_readout(const StateVector& sv, std::uint64_t shots, std::uint64_t seed, double p_ro);

/// One Pauli trajectory per shot.
///
/// For every gate of build_qaa_circuit, in order, two uniforms (u, w) are
/// drawn from the shot's kGateNoise stream. If u < p (p_1q for RX, p_2q for
/// RZZ), the Pauli with index floor(w * 3) of {X, Y, Z}, or floor(w * 15) of
/// the 15 non-identity two-qubit Paulis (first qubit major, I X Y Z order),
/// is applied after the gate. The final state is sampled with one uniform
/// from the kMeasure stream exactly as sample_measurements does, then bit q
/// is flipped when the q-th uniform of the kReadout stream is below p_ro.
/// The initial uniform superposition is prepared without noise.
///
/// With all probabilities zero the result is identical to
/// sample_measurements(qaa_evolve(graph, schedule), shots, seed).
Histogram noisy_qaa_histogram(const NoisyRunConfig& cfg);

/// One histogram per depth. Depth k runs with master seed `seed + k`.
/// Throws InputError for an empty depth list.
std::vector<Histogram> depth_sweep(const Graph& g, const NoiseModel& noise, const std::vector<std::uint64_t>& depths,
                                   double dt, std::uint64_t shots, std::uint64_t seed);

/// Fraction of shots on the oracle solutions.
double solution_prominence(const Histogram& h, const MaxCutSolution& sol);

/// True when the D solution words are exactly the D most frequent outcomes
/// (every solution count strictly above every non-solution count).
bool solutions_are_top(const Histogram& h, const MaxCutSolution& sol);

}  // namespace qaa
