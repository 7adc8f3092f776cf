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


#include "qaa/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qaa/error.hpp"
#include "qaa/hamiltonian.hpp"
#include "qaa/parallel.hpp"
#include "qaa/rng.hpp"

namespace qaa {

StateVector::StateVector(unsigned n_qubits) : n_qubits_(n_qubits) {
    check_dense_budget(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Complex{});
    amps_[0] = 1.0;
}

StateVector::StateVector(unsigned n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_dense_budget(n_qubits);
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw InputError("statevector needs " + std::to_string(std::size_t{1} << n_qubits) + " amplitudes, got " +
                         std::to_string(amps_.size()));
    }
}

StateVector StateVector::basis(unsigned n_qubits, std::uint64_t index) {
    StateVector sv(n_qubits);
    if (index >= sv.dim()) throw InputError("basis index out of range");
    sv[0] = 0.0;
    sv[index] = 1.0;
    return sv;
}

double StateVector::norm_squared() const noexcept {
    double s = 0;
    for (const Complex& a : amps_) s += std::norm(a);
    return s;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(), [](const Complex& a) { return std::norm(a); });
    return p;
}

void validate(const TrotterSchedule& sched) {
    if (!(sched.dt > 0.0) || !std::isfinite(sched.dt)) throw InputError("time step dt must be positive and finite");
}

std::vector<double> s_grid(std::uint64_t n_steps) {
    std::vector<double> s(n_steps);
    if (n_steps == 1) {
        s[0] = 0.0;
        return s;
    }
    const double denom = static_cast<double>(n_steps - 1);
    for (std::uint64_t k = 0; k < n_steps; ++k) s[k] = static_cast<double>(k) / denom;
    if (n_steps > 1) s.back() = 1.0;
    return s;
}

std::uint64_t Histogram::count(std::uint64_t word) const {
    auto it = counts.find(word);
    return it == counts.end() ? 0 : it->second;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> Histogram::top(std::size_t k) const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries(counts.begin(), counts.end());
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    if (k != 0 && entries.size() > k) entries.resize(k);
    return entries;
}

double Histogram::fraction_on(const std::vector<std::uint64_t>& words) const {
    if (shots == 0) return 0.0;
    std::uint64_t hit = 0;
    for (std::uint64_t w : words) hit += count(w);
    return static_cast<double>(hit) / static_cast<double>(shots);
}

namespace {

void append_layers(const Graph& g, double s, double dt, std::vector<Gate>& out) {
    const double beta = (1.0 - s) * dt;
    const double gamma = s * dt;
    for (unsigned q = 0; q < g.n_vertices(); ++q) out.push_back({GateKind::kRX, q, q, 2.0 * beta});
    for (const Edge& e : g.edges()) out.push_back({GateKind::kRZZ, e.u, e.v, -2.0 * gamma});
}

void check_qubit(const StateVector& sv, unsigned q) {
    if (q >= sv.n_qubits()) {
        throw InputError("qubit index " + std::to_string(q) + " out of range for " + std::to_string(sv.n_qubits()) +
                         " qubits");
    }
}

}  // namespace

std::vector<Gate> build_qaa_circuit(const Graph& g, const TrotterSchedule& sched) {
    validate(sched);
    std::vector<Gate> out;
    out.reserve(sched.n_steps * (g.n_vertices() + g.n_edges()));
    for (double s : s_grid(sched.n_steps)) append_layers(g, s, sched.dt, out);
    return out;
}

std::vector<Gate> build_fixed_s_circuit(const Graph& g, double s, const TrotterSchedule& sched) {
    validate(sched);
    if (!(s >= 0.0 && s <= 1.0)) throw InputError("interpolation parameter s must lie in [0, 1]");
    std::vector<Gate> layer;
    append_layers(g, s, sched.dt, layer);
    std::vector<Gate> out;
    out.reserve(sched.n_steps * layer.size());
    for (std::uint64_t k = 0; k < sched.n_steps; ++k) out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

StateVector init_plus_state(unsigned n_qubits) {
    check_dense_budget(n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    return StateVector(n_qubits, std::vector<Complex>(dim, Complex{1.0 / std::sqrt(static_cast<double>(dim))}));
}

void apply_rx(StateVector& sv, unsigned q, double theta) {
    check_qubit(sv, q);
    const double c = std::cos(theta / 2);
    const Complex mis{0.0, -std::sin(theta / 2)};
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t v = 0; v < sv.dim(); ++v) {
        if (v & bit) continue;
        const Complex a0 = sv[v];
        const Complex a1 = sv[v | bit];
        sv[v] = c * a0 + mis * a1;
        sv[v | bit] = c * a1 + mis * a0;
    }
}

void apply_rzz(StateVector& sv, unsigned i, unsigned j, double theta) {
    check_qubit(sv, i);
    check_qubit(sv, j);
    if (i == j) throw InputError("rzz needs two distinct qubits, got " + std::to_string(i) + " twice");
    const Complex same = std::polar(1.0, -theta / 2);
    const Complex differ = std::polar(1.0, theta / 2);
    for (std::size_t v = 0; v < sv.dim(); ++v) {
        const bool parity = ((v >> i) ^ (v >> j)) & 1U;
        sv[v] *= parity ? differ : same;
    }
}

void apply_pauli(StateVector& sv, unsigned q, unsigned pauli) {
    check_qubit(sv, q);
    const std::size_t bit = std::size_t{1} << q;
    switch (pauli) {
        case 0:
            return;
        case 1:
            for (std::size_t v = 0; v < sv.dim(); ++v) {
                if (!(v & bit)) std::swap(sv[v], sv[v | bit]);
            }
            return;
        case 2: {
            // Y|0> = i|1>, Y|1> = -i|0>
            const Complex i{0.0, 1.0};
            for (std::size_t v = 0; v < sv.dim(); ++v) {
                if (v & bit) continue;
                const Complex a0 = sv[v];
                sv[v] = -i * sv[v | bit];
                sv[v | bit] = i * a0;
            }
            return;
        }
        case 3:
            for (std::size_t v = 0; v < sv.dim(); ++v) {
                if (v & bit) sv[v] = -sv[v];
            }
            return;
        default:
            throw InputError("pauli index must be 0..3, got " + std::to_string(pauli));
    }
}

void apply_gate(StateVector& sv, const Gate& gate) {
    if (gate.kind == GateKind::kRX) {
        apply_rx(sv, gate.q0, gate.theta);
    } else {
        apply_rzz(sv, gate.q0, gate.q1, gate.theta);
    }
}

void apply_circuit(StateVector& sv, std::span<const Gate> circuit) {
    for (const Gate& gate : circuit) apply_gate(sv, gate);
}

StateVector qaa_evolve(const Graph& g, const TrotterSchedule& sched) {
    validate(sched);
    StateVector sv = init_plus_state(g.n_vertices());
    std::vector<Gate> layer;
    for (double s : s_grid(sched.n_steps)) {
        layer.clear();
        append_layers(g, s, sched.dt, layer);
        apply_circuit(sv, layer);
    }
    return sv;
}

BasisSampler::BasisSampler(const std::vector<double>& probabilities) : cumulative_(probabilities.size()) {
    double acc = 0;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        acc += probabilities[k];
        cumulative_[k] = acc;
    }
    if (probabilities.empty() || std::abs(acc - 1.0) > 1e-6) {
        throw NumericalError("state is not normalized (total probability " + std::to_string(acc) + ")");
    }
}

std::uint64_t BasisSampler::sample(double u) const {
    const double target = u * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    if (it == cumulative_.end()) --it;
    // Never land on a zero-probability entry at the top end.
    std::size_t k = static_cast<std::size_t>(it - cumulative_.begin());
    while (k > 0 && cumulative_[k] == cumulative_[k - 1]) --k;
    return k;
}

Histogram sample_measurements(const StateVector& sv, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw InputError("shots must be at least 1");
    const BasisSampler sampler(sv.probabilities());
    std::vector<std::vector<std::uint64_t>> partial(chunk_count(shots, 1024), std::vector<std::uint64_t>(sv.dim()));
    parallel_chunks(
        shots,
        [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            auto& local = partial[chunk];
            for (std::uint64_t k = begin; k < end; ++k) {
                SplitMix64 rng(derive_shot_seed(seed, k, ShotStream::kMeasure));
                ++local[sampler.sample(rng.uniform())];
            }
        },
        1024);
    Histogram h{sv.n_qubits(), shots, {}};
    for (std::size_t v = 0; v < sv.dim(); ++v) {
        std::uint64_t c = 0;
        for (const auto& local : partial) c += local[v];
        if (c) h.counts[v] = c;
    }
    return h;
}

double ground_manifold_overlap(const StateVector& sv, const MaxCutSolution& sol) {
    double p = 0;
    for (const Partition& part : sol.solutions) {
        if (part.n_vertices != sv.n_qubits()) {
            throw InputError("solution length " + std::to_string(part.n_vertices) + " does not match " +
                             std::to_string(sv.n_qubits()) + " qubits");
        }
        p += std::norm(sv[part.word]);
    }
    return p;
}

double phase_aligned_distance(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw InputError("phase_aligned_distance: dimension mismatch");
    Complex overlap{};
    for (std::size_t k = 0; k < a.dim(); ++k) overlap += std::conj(a[k]) * b[k];
    const double d2 = a.norm_squared() + b.norm_squared() - 2.0 * std::abs(overlap);
    return std::sqrt(std::max(0.0, d2));
}

}  // namespace qaa
