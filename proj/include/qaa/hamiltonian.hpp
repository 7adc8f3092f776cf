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

#include <vector>

#include "qaa/graph.hpp"
#include "qaa/linalg.hpp"

namespace qaa {

/// Largest qubit count for dense Hamiltonians and statevectors.
inline constexpr unsigned kMaxDenseQubits = 14;

/// Default scale on the problem term. The circuit gate rzz(-2 gamma) imprints
/// exp(i gamma Z_i Z_j) per edge, which is evolution under 2 * H_MC up to a
/// global phase, so a factor of 2 makes exact evolution match the circuits.
inline constexpr double kDefaultZZFactor = 2.0;

/// Diagonal of H_MC in the computational basis: diag[v] = -cut(v).
struct DiagonalProblem {
    unsigned n_qubits = 0;
    std::vector<double> diag;
};

struct InterpolationParams {
    double s = 0.0;
    double zz_factor = kDefaultZZFactor;
};

/// Throws BudgetError when n is outside [1, kMaxDenseQubits].
void check_dense_budget(unsigned n_qubits);

DiagonalProblem build_problem_diagonal(const Graph& g);

/// H_M = -sum_i X_i as a dense 2^n x 2^n matrix.
RealMatrix build_mixer(unsigned n_qubits);

/// H(s) = (1 - s) H_M + s * zz_factor * H_MC.
/// Throws InputError for s outside [0, 1] or a non-positive zz_factor.
RealMatrix interpolate(const Graph& g, const InterpolationParams& params);

/// Diagonal matrix from a DiagonalProblem.
RealMatrix to_matrix(const DiagonalProblem& p);

/// Ascending eigenvalues of a real symmetric matrix, optionally with
/// orthonormal eigenvectors (columns).
EigenDecomposition<double> exact_spectrum(const RealMatrix& h, bool want_vectors = false);

/// exp(i t H) = V diag(exp(i t lambda)) V^T.
ComplexMatrix exact_unitary(const RealMatrix& h, double t);

/// Same, from a decomposition already computed (must carry vectors).
ComplexMatrix exact_unitary(const EigenDecomposition<double>& eig, double t);

}  // namespace qaa
