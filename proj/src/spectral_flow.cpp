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


#include "qaa/spectral_flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "qaa/error.hpp"
#include "qaa/parallel.hpp"

namespace qaa {

double wrap_phase(double phi) {
    constexpr double two_pi = 2 * std::numbers::pi;
    phi = std::remainder(phi, two_pi);  // [-pi, pi]
    if (phi <= -std::numbers::pi) phi += two_pi;
    return phi;
}

ComplexMatrix trotter_unitary(const Graph& g, double s, const TrotterSchedule& sched) {
    const unsigned n = g.n_vertices();
    if (n > kMaxUnitaryQubits) {
        throw BudgetError("dense unitary budget is " + std::to_string(kMaxUnitaryQubits) + " qubits, got " +
                          std::to_string(n));
    }
    const std::vector<Gate> circuit = build_fixed_s_circuit(g, s, sched);
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix u(dim, dim);
    parallel_chunks(dim, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t col = begin; col < end; ++col) {
            StateVector sv = StateVector::basis(n, col);
            apply_circuit(sv, circuit);
            for (std::size_t row = 0; row < dim; ++row) u(row, col) = sv[row];
        }
    });
    return u;
}

std::vector<double> eigenphases(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) throw InputError("eigenphases: matrix is not square");
    const double defect = unitarity_defect(u);
    if (!(defect <= 1e-8)) throw InputError("eigenphases: matrix is not unitary (defect " + std::to_string(defect) + ")");
    const std::size_t dim = u.rows();

    ComplexMatrix re_part(dim, dim);
    ComplexMatrix im_part(dim, dim);
    const Complex half_i{0.0, 0.5};
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const Complex a = u(i, j);
            const Complex b = std::conj(u(j, i));
            re_part(i, j) = 0.5 * (a + b);
            im_part(i, j) = -half_i * (a - b);
        }
    }
    auto eig = jacobi_eigen(re_part, true);
    ComplexMatrix& vecs = *eig.vectors;

    for (auto [begin, end] : cluster_sorted(eig.values, kDegeneracyTolerance)) {
        const std::size_t m = end - begin;
        if (m < 2) continue;
        // Restrict the anti-Hermitian part to the cluster subspace.
        ComplexMatrix proj(dim, m);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < m; ++c) proj(r, c) = vecs(r, begin + c);
        }
        const ComplexMatrix restricted = multiply(adjoint(proj), multiply(im_part, proj));
        const auto inner = jacobi_eigen(restricted, true);
        const ComplexMatrix rotated = multiply(proj, *inner.vectors);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < m; ++c) vecs(r, begin + c) = rotated(r, c);
        }
    }

    std::vector<double> phases(dim);
    std::vector<Complex> uw(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t r = 0; r < dim; ++r) {
            Complex acc{};
            for (std::size_t c = 0; c < dim; ++c) acc += u(r, c) * vecs(c, k);
            uw[r] = acc;
        }
        Complex rayleigh{};
        for (std::size_t r = 0; r < dim; ++r) rayleigh += std::conj(vecs(r, k)) * uw[r];
        phases[k] = wrap_phase(std::arg(rayleigh));
    }
    std::sort(phases.begin(), phases.end());
    return phases;
}

std::vector<std::vector<BranchPoint>> track_branches(const std::vector<FlowSample>& samples) {
    std::vector<std::vector<BranchPoint>> branches;
    if (samples.empty()) return branches;
    const std::size_t width = samples.front().eigenphases.size();
    branches.resize(width);
    std::vector<double> velocity(width, 0.0);
    for (std::size_t b = 0; b < width; ++b) branches[b].push_back({samples[0].s, samples[0].eigenphases[b]});

    struct Candidate {
        double distance;
        double predicted_miss;
        std::size_t branch;
        std::size_t target;
    };
    std::vector<Candidate> candidates;
    for (std::size_t k = 1; k < samples.size(); ++k) {
        const auto& next = samples[k].eigenphases;
        if (next.size() != width) throw InputError("track_branches: samples have different eigenvalue counts");
        candidates.clear();
        candidates.reserve(width * width);
        for (std::size_t b = 0; b < width; ++b) {
            const double last = branches[b].back().phase;
            for (std::size_t j = 0; j < width; ++j) {
                const double step = wrap_phase(next[j] - last);
                candidates.push_back({std::abs(step), std::abs(wrap_phase(step - velocity[b])), b, j});
            }
        }
        std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
            return std::tie(x.distance, x.predicted_miss, x.branch, x.target) <
                   std::tie(y.distance, y.predicted_miss, y.branch, y.target);
        });
        std::vector<bool> branch_done(width, false);
        std::vector<bool> target_done(width, false);
        std::size_t assigned = 0;
        for (const Candidate& c : candidates) {
            if (branch_done[c.branch] || target_done[c.target]) continue;
            branch_done[c.branch] = target_done[c.target] = true;
            velocity[c.branch] = wrap_phase(next[c.target] - branches[c.branch].back().phase);
            branches[c.branch].push_back({samples[k].s, next[c.target]});
            if (++assigned == width) break;
        }
    }
    return branches;
}

SpectralFlow compute_flow(const std::function<ComplexMatrix(double)>& unitary_at, std::size_t n_samples,
                          double scale, double t, const std::function<double(double)>& spread_bound) {
    if (n_samples < 2) throw InputError("spectral flow needs at least 2 samples of s");
    SpectralFlow flow;
    flow.scale = scale;
    flow.t = t;
    const std::vector<double> grid = s_grid(n_samples);
    flow.samples.resize(n_samples);
    parallel_chunks(n_samples, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            FlowSample& sample = flow.samples[k];
            sample.s = grid[k];
            sample.eigenphases = eigenphases(unitary_at(grid[k]));
            const double lambda = scale * grid[k];
            sample.scaled_points.reserve(sample.eigenphases.size());
            for (double phi : sample.eigenphases) sample.scaled_points.push_back(std::polar(lambda, phi));
        }
    });
    for (double s : grid) flow.max_phase_spread = std::max(flow.max_phase_spread, spread_bound(s));
    flow.wraps = flow.max_phase_spread >= 2 * std::numbers::pi;
    flow.branches = track_branches(flow.samples);
    return flow;
}

SpectralFlow compute_flow(const Graph& g, const FlowParams& params) {
    if (g.n_vertices() > kMaxUnitaryQubits) {
        throw BudgetError("dense unitary budget is " + std::to_string(kMaxUnitaryQubits) + " qubits, got " +
                          std::to_string(g.n_vertices()));
    }
    validate(params.schedule);
    const double t = params.schedule.tau();
    const double n = g.n_vertices();
    const double m = static_cast<double>(g.n_edges());
    // Width of the effective generator (1 - s) H_M + s sum Z_i Z_j.
    auto spread = [t, n, m](double s) { return t * (2 * n * (1 - s) + 2 * m * s); };
    return compute_flow([&](double s) { return trotter_unitary(g, s, params.schedule); }, params.n_samples,
                        params.scale, t, spread);
}

double ground_phase_at_end(const Graph& g, const MaxCutSolution& sol, const TrotterSchedule& sched) {
    const double edges = static_cast<double>(g.n_edges());
    return wrap_phase(sched.tau() * (edges - 2.0 * sol.max_cut));
}

std::size_t count_branches_ending_at(const SpectralFlow& flow, double phase, double tol) {
    std::size_t hits = 0;
    for (const auto& branch : flow.branches) {
        if (!branch.empty() && std::abs(wrap_phase(branch.back().phase - phase)) <= tol) ++hits;
    }
    return hits;
}

namespace {

struct LineSample {
    double s;
    std::vector<double> offsets;  // lambda_k(s) - line(s), ascending in k
};

std::size_t count_below(const LineSample& x) {
    return static_cast<std::size_t>(std::count_if(x.offsets.begin(), x.offsets.end(), [](double d) { return d < 0; }));
}

void check_endpoint_gap(const LineSample& x, const char* which) {
    const std::size_t below = count_below(x);
    if (below == 0 || below == x.offsets.size()) {
        throw DegenerateGapError(std::string("no spectral gap to place the reference line at ") + which);
    }
    for (double d : x.offsets) {
        if (std::abs(d) <= kDegeneracyTolerance) {
            throw DegenerateGapError(std::string("reference line touches the spectrum at ") + which);
        }
    }
}

}  // namespace

IndexReport intersection_index(const std::function<RealMatrix(double)>& hamiltonian_at, double line_start,
                               double line_end, double lipschitz, const IndexParams& params) {
    if (params.n_samples < 2) throw InputError("intersection index needs at least 2 samples of s");
    if (!(params.min_interval > 0)) throw InputError("min_interval must be positive");
    IndexReport report;
    auto evaluate = [&](double s) {
        ++report.evaluations;
        LineSample x{s, exact_spectrum(hamiltonian_at(s)).values};
        const double line = (1 - s) * line_start + s * line_end;
        for (double& d : x.offsets) d -= line;
        return x;
    };

    const std::vector<double> grid = s_grid(params.n_samples);
    std::vector<LineSample> coarse;
    coarse.reserve(grid.size());
    for (double s : grid) coarse.push_back(evaluate(s));
    check_endpoint_gap(coarse.front(), "s = 0");
    check_endpoint_gap(coarse.back(), "s = 1");
    report.rank_start = count_below(coarse.front());
    report.rank_end = count_below(coarse.back());

    auto tally = [&](const LineSample& a, const LineSample& b) {
        for (std::size_t k = 0; k < a.offsets.size(); ++k) {
            const bool below_a = a.offsets[k] < 0;
            const bool below_b = b.offsets[k] < 0;
            if (!below_a && below_b) ++report.crossings_down;
            if (below_a && !below_b) ++report.crossings_up;
        }
    };
    // A branch can only cross (or cross twice) inside [a, b] if the Lipschitz
    // bound lets it travel from its offset at a to zero and on to its offset
    // at b; refine exactly those intervals.
    auto needs_refinement = [&](const LineSample& a, const LineSample& b) {
        const double reach = lipschitz * (b.s - a.s);
        for (std::size_t k = 0; k < a.offsets.size(); ++k) {
            if (reach >= std::abs(a.offsets[k]) + std::abs(b.offsets[k])) return true;
        }
        return false;
    };

    std::vector<std::pair<LineSample, LineSample>> stack;
    for (std::size_t k = coarse.size() - 1; k > 0; --k) stack.emplace_back(coarse[k - 1], coarse[k]);
    while (!stack.empty()) {
        auto [a, b] = std::move(stack.back());
        stack.pop_back();
        if (b.s - a.s > params.min_interval && needs_refinement(a, b)) {
            LineSample mid = evaluate(0.5 * (a.s + b.s));
            stack.emplace_back(mid, std::move(b));
            stack.emplace_back(std::move(a), std::move(mid));
            continue;
        }
        tally(a, b);
    }

    report.index = static_cast<long>(report.crossings_down) - static_cast<long>(report.crossings_up);
    const long rank_difference = static_cast<long>(report.rank_end) - static_cast<long>(report.rank_start);
    if (report.index != rank_difference) {
        throw NumericalError("intersection index " + std::to_string(report.index) +
                             " disagrees with rank difference " + std::to_string(rank_difference));
    }
    return report;
}

IndexReport intersection_index(const Graph& g, const IndexParams& params) {
    if (!(params.zz_factor > 0.0)) throw InputError("zz_factor must be positive");
    const RealMatrix mixer = build_mixer(g.n_vertices());
    const DiagonalProblem problem = build_problem_diagonal(g);
    unsigned max_cut = 0;
    for (double d : problem.diag) max_cut = std::max(max_cut, static_cast<unsigned>(-d));
    const double n = g.n_vertices();
    const double line_start = -n + 1.0;
    const double line_end = params.zz_factor * (-static_cast<double>(max_cut) + 0.5);
    const double lipschitz = n + params.zz_factor * max_cut + std::abs(line_end - line_start);
    auto hamiltonian_at = [&](double s) {
        RealMatrix h = mixer;
        for (double& x : h.data()) x *= (1 - s);
        for (std::size_t v = 0; v < problem.diag.size(); ++v) h(v, v) += s * params.zz_factor * problem.diag[v];
        return h;
    };
    return intersection_index(hamiltonian_at, line_start, line_end, lipschitz, params);
}

}  // namespace qaa
