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

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "qaa/graph.hpp"
#include "qaa/hamiltonian.hpp"
#include "qaa/linalg.hpp"
#include "qaa/statevector.hpp"

namespace qaa {

/// Largest qubit count for which dense Trotter unitaries are built.
inline constexpr unsigned kMaxUnitaryQubits = 10;

/// Eigenvalues closer than this (in the Hermitian part, or in phase) are
/// treated as one level.
inline constexpr double kDegeneracyTolerance = 1e-8;

/// Unitary of the fixed-s circuit (n_steps repetitions of RX(2 (1 - s) dt)
/// on every vertex followed by RZZ(-2 s dt) on every edge). Column v is the
/// circuit applied to basis state |v>. This equals exp(i t H(s)) with
/// zz_factor 2 up to the global phase exp(i s t |E|) and Trotter error.
ComplexMatrix trotter_unitary(const Graph& g, double s, const TrotterSchedule& sched);

/// All eigenvalue angles of a unitary in (-pi, pi], ascending.
///
/// The Hermitian part (U + U^dagger) / 2 is diagonalized by Jacobi; inside
/// every cluster of its eigenvalues the part (U - U^dagger) / 2i restricted to
/// the cluster is diagonalized to split e^{i phi} from e^{-i phi}. This is
/// exact for normal matrices. Throws InputError when U is not unitary to 1e-8.
std::vector<double> eigenphases(const ComplexMatrix& u);

/// Maps an angle into (-pi, pi].
double wrap_phase(double phi);

struct FlowSample {
    double s = 0.0;
    std::vector<double> eigenphases;
    /// Lambda(s) * exp(i phase) for every eigenphase, same order.
    std::vector<std::complex<double>> scaled_points;
};

struct BranchPoint {
    double s;
    double phase;
};

struct SpectralFlow {
    std::vector<FlowSample> samples;
    /// branches[b][k] is the point of branch b at sample k.
    std::vector<std::vector<BranchPoint>> branches;
    /// Lambda(s) = scale * s.
    double scale = 20.0;
    /// Evolution time t of the sampled unitaries.
    double t = 0.0;
    /// Upper bound on t * (spectral width of H(s)) over the samples.
    double max_phase_spread = 0.0;
    /// True when max_phase_spread >= 2 pi: the circle map is then not
    /// injective and phases of different levels may alias.
    bool wraps = false;
};

struct FlowParams {
    std::size_t n_samples = 20;
    TrotterSchedule schedule{0.1, 50};
    double scale = 20.0;
};

/// Samples s uniformly over [0, 1] (both ends) and records the spectrum of
/// the Trotter unitary at each sample, then tracks branches. Samples are
/// evaluated in parallel; output is ordered by s. Throws InputError for
/// fewer than 2 samples and BudgetError above kMaxUnitaryQubits.
SpectralFlow compute_flow(const Graph& g, const FlowParams& params = {});

/// Same for an arbitrary unitary family. \p spread_bound(s) bounds
/// t * (spectral width) at s and only feeds the wrap report.
SpectralFlow compute_flow(const std::function<ComplexMatrix(double)>& unitary_at, std::size_t n_samples,
                          double scale, double t, const std::function<double(double)>& spread_bound);

/// Greedy nearest-phase branch assignment between consecutive samples.
/// Distances are taken modulo 2 pi; ties go to the candidate closest to the
/// branch's extrapolated phase (last phase plus last velocity).
std::vector<std::vector<BranchPoint>> track_branches(const std::vector<FlowSample>& samples);

/// Phase at the end of the flow of the Max-Cut ground level:
/// wrap(t * (|E| - 2 C)).
double ground_phase_at_end(const Graph& g, const MaxCutSolution& sol, const TrotterSchedule& sched);

/// Number of branches whose last phase is within tol of \p phase (mod 2 pi).
std::size_t count_branches_ending_at(const SpectralFlow& flow, double phase, double tol);

struct IndexReport {
    /// crossings_down - crossings_up.
    long index = 0;
    /// Crossings of the reference line from above (+1 each).
    std::size_t crossings_down = 0;
    /// Crossings from below (-1 each).
    std::size_t crossings_up = 0;
    std::size_t rank_start = 0;
    std::size_t rank_end = 0;
    /// Number of exact diagonalizations performed, including refinements.
    std::size_t evaluations = 0;
};

struct IndexParams {
    std::size_t n_samples = 20;
    double zz_factor = kDefaultZZFactor;
    /// Refinement stops at intervals narrower than this.
    double min_interval = 1e-7;
};

/// Intersection index of the exact Hermitian flow H(s) with the line joining
/// the s = 0 mid-gap point -n + 1 to the s = 1 mid-gap point
/// zz_factor * (-C + 1/2). Throws DegenerateGapError when no gap exists at
/// an endpoint, NumericalError if the crossing count and rank difference
/// disagree.
IndexReport intersection_index(const Graph& g, const IndexParams& params = {});

/// Intersection index for a general Hermitian family on [0, 1]. The reference
/// line is linear from line_start to line_end; \p lipschitz bounds
/// |d/ds (lambda_k(s) - line(s))| and drives the refinement.
IndexReport intersection_index(const std::function<RealMatrix(double)>& hamiltonian_at, double line_start,
                               double line_end, double lipschitz, const IndexParams& params);

}  // namespace qaa
