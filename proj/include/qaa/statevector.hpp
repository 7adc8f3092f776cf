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
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qaa/graph.hpp"
#include "qaa/linalg.hpp"

namespace qaa {

/// Dense amplitudes over the 2^n computational basis states; basis index bit
/// q is qubit q.
class StateVector {
   public:
    /// |0...0>. Throws BudgetError outside the dense budget.
    explicit StateVector(unsigned n_qubits);
    StateVector(unsigned n_qubits, std::vector<Complex> amplitudes);

    static StateVector basis(unsigned n_qubits, std::uint64_t index);

    unsigned n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amps_.size(); }

    std::span<Complex> amplitudes() noexcept { return amps_; }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    Complex& operator[](std::size_t k) noexcept { return amps_[k]; }
    const Complex& operator[](std::size_t k) const noexcept { return amps_[k]; }

    double norm_squared() const noexcept;
    std::vector<double> probabilities() const;

   private:
    unsigned n_qubits_;
    std::vector<Complex> amps_;
};

/// Discretized evolution: n_steps layers of width dt, total time n_steps * dt.
struct TrotterSchedule {
    double dt = 0.1;
    std::uint64_t n_steps = 0;

    double tau() const noexcept { return dt * static_cast<double>(n_steps); }
};

/// Throws InputError unless dt is positive and finite.
void validate(const TrotterSchedule& sched);

/// The n_steps interpolation values: uniform over [0, 1] including both
/// endpoints, {0} for a single step, empty for zero steps.
std::vector<double> s_grid(std::uint64_t n_steps);

/// Outcome counts keyed by basis index.
struct Histogram {
    unsigned n_qubits = 0;
    std::uint64_t shots = 0;
    std::map<std::uint64_t, std::uint64_t> counts;

    std::uint64_t count(std::uint64_t word) const;

    /// Entries sorted by descending count, ties by ascending word; all entries
    /// when k == 0.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> top(std::size_t k) const;

    /// Fraction of shots landing on any of the given words.
    double fraction_on(const std::vector<std::uint64_t>& words) const;

    friend bool operator==(const Histogram&, const Histogram&) = default;
};

enum class GateKind { kRX, kRZZ };

/// One rotation of the adiabatic circuit.
struct Gate {
    GateKind kind;
    unsigned q0;
    unsigned q1;  // unused for kRX
    double theta;
};

/// Gate list of the time-dependent adiabatic circuit: for every s in
/// s_grid(n_steps), RX(2 (1 - s) dt) on each vertex, then RZZ(-2 s dt) on
/// each edge. The Hadamard-equivalent preparation is not included.
std::vector<Gate> build_qaa_circuit(const Graph& g, const TrotterSchedule& sched);

/// Gate list of n_steps repetitions of the fixed-s layer pair
/// RX(2 (1 - s) dt), RZZ(-2 s dt).
std::vector<Gate> build_fixed_s_circuit(const Graph& g, double s, const TrotterSchedule& sched);

/// Uniform superposition 2^{-n/2} on every basis state.
StateVector init_plus_state(unsigned n_qubits);

/// RX(theta) = exp(-i theta X / 2) on qubit q.
void apply_rx(StateVector& sv, unsigned q, double theta);

/// RZZ(theta) = exp(-i theta Z_i Z_j / 2); i != j.
void apply_rzz(StateVector& sv, unsigned i, unsigned j, double theta);

/// Pauli on qubit q: 1 = X, 2 = Y, 3 = Z, 0 = identity.
void apply_pauli(StateVector& sv, unsigned q, unsigned pauli);

void apply_gate(StateVector& sv, const Gate& gate);
void apply_circuit(StateVector& sv, std::span<const Gate> circuit);

/// Runs the adiabatic circuit on init_plus_state(n).
StateVector qaa_evolve(const Graph& g, const TrotterSchedule& sched);

/// Inverse-CDF sampler over basis indices.
class BasisSampler {
   public:
    /// Throws NumericalError when the probabilities do not sum to 1 within
    /// 1e-6.
    explicit BasisSampler(const std::vector<double>& probabilities);

    /// Maps u in [0, 1) to a basis index.
    std::uint64_t sample(double u) const;

   private:
    std::vector<double> cumulative_;
};

/// Draws `shots` independent basis outcomes with Born probabilities. Shot k
/// uses the kMeasure stream of derive_shot_seed(seed, k, ...), so the result
/// is deterministic for a fixed seed. Throws InputError for zero shots and
/// NumericalError for an unnormalized state.
Histogram sample_measurements(const StateVector& sv, std::uint64_t shots, std::uint64_t seed);

/// Total probability on the solution words.
double ground_manifold_overlap(const StateVector& sv, const MaxCutSolution& sol);

/// Phase-insensitive L2 distance min_phi ||a - exp(i phi) b||.
double phase_aligned_distance(const StateVector& a, const StateVector& b);

}  // namespace qaa
