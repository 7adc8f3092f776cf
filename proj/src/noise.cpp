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


#include "qaa/noise.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "qaa/error.hpp"
#include "qaa/parallel.hpp"
#include "qaa/rng.hpp"

namespace qaa {

void validate(const NoiseModel& noise) {
    for (double p : {noise.p_1q, noise.p_2q, noise.p_ro}) {
        if (!(p >= 0.0 && p <= 1.0)) throw InputError("noise probabilities must lie in [0, 1]");
    }
}

namespace {

double parse_probability(std::string_view text) {
    std::string owned(text);
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(owned, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != owned.size()) throw InputError("invalid probability '" + owned + "' in custom noise");
    return value;
}

struct ErrorEvent {
    std::size_t gate;
    unsigned pauli;  // 1..3 for one qubit, 1..15 for two qubits
};

// Two-qubit Pauli index k in 1..15 acts as (k / 4) on the first qubit and
// (k % 4) on the second, with 0 = I, 1 = X, 2 = Y, 3 = Z.
void apply_error(StateVector& sv, const Gate& gate, unsigned pauli) {
    if (gate.kind == GateKind::kRX) {
        apply_pauli(sv, gate.q0, pauli);
    } else {
        apply_pauli(sv, gate.q0, pauli / 4);
        apply_pauli(sv, gate.q1, pauli % 4);
    }
}

std::uint64_t apply_readout(std::uint64_t outcome, unsigned n, double p_ro, std::uint64_t seed, std::uint64_t shot) {
    if (p_ro <= 0.0) return outcome;
    SplitMix64 readout(derive_shot_seed(seed, shot, ShotStream::kReadout));
    for (unsigned q = 0; q < n; ++q) {
        if (readout.uniform() < p_ro) outcome ^= std::uint64_t{1} << q;
    }
    return outcome;
}

Histogram merge_partials(unsigned n, std::uint64_t shots, const std::vector<std::vector<std::uint64_t>>& partial) {
    Histogram h{n, shots, {}};
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t v = 0; v < dim; ++v) {
        std::uint64_t c = 0;
        for (const auto& local : partial) c += local[v];
        if (c) h.counts[v] = c;
    }
    return h;
}

}  // namespace

Histogram sample_with_readout(const StateVector& sv, std::uint64_t shots, std::uint64_t seed, double p_ro) {
    if (shots == 0) throw InputError("shots must be at least 1");
    if (!(p_ro >= 0.0 && p_ro <= 1.0)) throw InputError("noise probabilities must lie in [0, 1]");
    const BasisSampler sampler(sv.probabilities());
    std::vector<std::vector<std::uint64_t>> partial(chunk_count(shots, 1024), std::vector<std::uint64_t>(sv.dim()));
    parallel_chunks(
        shots,
        [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            for (std::uint64_t shot = begin; shot < end; ++shot) {
                SplitMix64 measure(derive_shot_seed(seed, shot, ShotStream::kMeasure));
                ++partial[chunk][apply_readout(sampler.sample(measure.uniform()), sv.n_qubits(), p_ro, seed, shot)];
            }
        },
        1024);
    return merge_partials(sv.n_qubits(), shots, partial);
}

NoiseModel parse_noise_preset(std::string_view name) {
    if (name == "heron-r3-opt") return kHeronR3Optimistic;
    if (name == "heron-r2-med") return kHeronR2Median;
    if (name == "none") return NoiseModel{};
    constexpr std::string_view custom = "custom:";
    if (name.starts_with(custom)) {
        std::string_view rest = name.substr(custom.size());
        std::vector<double> values;
        while (true) {
            const auto comma = rest.find(',');
            values.push_back(parse_probability(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (values.size() != 3) throw InputError("custom noise needs exactly three probabilities: custom:p1,p2,pro");
        NoiseModel noise{values[0], values[1], values[2]};
        validate(noise);
        return noise;
    }
    throw InputError("unknown noise preset '" + std::string(name) +
                     "' (expected heron-r3-opt, heron-r2-med, none or custom:p1,p2,pro)");
}

Histogram noisy_qaa_histogram(const NoisyRunConfig& cfg) {
    validate(cfg.noise);
    validate(cfg.schedule);
    if (cfg.shots == 0) throw InputError("shots must be at least 1");
    const Graph& g = cfg.graph;
    const unsigned n = g.n_vertices();
    const std::vector<Gate> circuit = build_qaa_circuit(g, cfg.schedule);
    // Shots without any gate error share the ideal final state.
    const StateVector ideal = [&] {
        StateVector sv = init_plus_state(n);
        apply_circuit(sv, circuit);
        return sv;
    }();
    const BasisSampler ideal_sampler(ideal.probabilities());
    const std::size_t dim = ideal.dim();
    const bool gate_noise = cfg.noise.p_1q > 0.0 || cfg.noise.p_2q > 0.0;

    std::vector<std::vector<std::uint64_t>> partial(chunk_count(cfg.shots, 256), std::vector<std::uint64_t>(dim));
    parallel_chunks(
        cfg.shots,
        [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            auto& local = partial[chunk];
            std::vector<ErrorEvent> events;
            for (std::uint64_t shot = begin; shot < end; ++shot) {
                events.clear();
                if (gate_noise) {
                    SplitMix64 rng(derive_shot_seed(cfg.seed, shot, ShotStream::kGateNoise));
                    for (std::size_t k = 0; k < circuit.size(); ++k) {
                        const double u = rng.uniform();
                        const double w = rng.uniform();
                        const bool single = circuit[k].kind == GateKind::kRX;
                        const double p = single ? cfg.noise.p_1q : cfg.noise.p_2q;
                        if (u < p) {
                            const unsigned choices = single ? 3 : 15;
                            const unsigned pick = std::min(choices - 1, static_cast<unsigned>(w * choices));
                            events.push_back({k, pick + 1});
                        }
                    }
                }

                SplitMix64 measure(derive_shot_seed(cfg.seed, shot, ShotStream::kMeasure));
                std::uint64_t outcome = 0;
                if (events.empty()) {
                    outcome = ideal_sampler.sample(measure.uniform());
                } else {
                    StateVector sv = init_plus_state(n);
                    std::size_t next = 0;
                    for (std::size_t k = 0; k < circuit.size(); ++k) {
                        apply_gate(sv, circuit[k]);
                        while (next < events.size() && events[next].gate == k) {
                            apply_error(sv, circuit[k], events[next].pauli);
                            ++next;
                        }
                    }
                    outcome = BasisSampler(sv.probabilities()).sample(measure.uniform());
                }

                ++local[apply_readout(outcome, n, cfg.noise.p_ro, cfg.seed, shot)];
            }
        },
        256);

    return merge_partials(n, cfg.shots, partial);
}

std::vector<Histogram> depth_sweep(const Graph& g, const NoiseModel& noise, const std::vector<std::uint64_t>& depths,
                                   double dt, std::uint64_t shots, std::uint64_t seed) {
    if (depths.empty()) throw InputError("depth sweep needs at least one depth");
    std::vector<Histogram> out;
    out.reserve(depths.size());
    for (std::size_t k = 0; k < depths.size(); ++k) {
        out.push_back(noisy_qaa_histogram({g, TrotterSchedule{dt, depths[k]}, noise, shots, seed + k}));
    }
    return out;
}

double solution_prominence(const Histogram& h, const MaxCutSolution& sol) {
    std::vector<std::uint64_t> words;
    for (const Partition& p : sol.solutions) words.push_back(p.word);
    return h.fraction_on(words);
}

bool solutions_are_top(const Histogram& h, const MaxCutSolution& sol) {
    std::uint64_t weakest_solution = ~std::uint64_t{0};
    std::vector<std::uint64_t> words;
    for (const Partition& p : sol.solutions) {
        words.push_back(p.word);
        weakest_solution = std::min(weakest_solution, h.count(p.word));
    }
    std::uint64_t strongest_other = 0;
    for (const auto& [word, count] : h.counts) {
        if (std::find(words.begin(), words.end(), word) == words.end()) strongest_other = std::max(strongest_other, count);
    }
    return weakest_solution > strongest_other;
}

}  // namespace qaa
