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
#include "qaa/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "qaa/error.hpp"

namespace qaa {

void check_dense_budget(unsigned n_qubits) {
    if (n_qubits == 0) throw InputError("qubit count must be at least 1");
    if (n_qubits > kMaxDenseQubits) {
        throw BudgetError("dense budget is " + std::to_string(kMaxDenseQubits) + " qubits, got " +
                          std::to_string(n_qubits));
    }
}

DiagonalProblem build_problem_diagonal(const Graph& g) {
    check_dense_budget(g.n_vertices());
    DiagonalProblem out{g.n_vertices(), std::vector<double>(std::size_t{1} << g.n_vertices())};
    for (std::size_t v = 0; v < out.diag.size(); ++v) out.diag[v] = -static_cast<double>(cut_value_of_word(g, v));
    return out;
}

RealMatrix build_mixer(unsigned n_qubits) {
    check_dense_budget(n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    RealMatrix h(dim, dim);
    for (std::size_t v = 0; v < dim; ++v) {
        for (unsigned q = 0; q < n_qubits; ++q) h(v, v ^ (std::size_t{1} << q)) = -1.0;
    }
    return h;
}

RealMatrix to_matrix(const DiagonalProblem& p) {
    RealMatrix h(p.diag.size(), p.diag.size());
    for (std::size_t v = 0; v < p.diag.size(); ++v) h(v, v) = p.diag[v];
    return h;
}

RealMatrix interpolate(const Graph& g, const InterpolationParams& params) {
    if (!(params.s >= 0.0 && params.s <= 1.0)) throw InputError("interpolation parameter s must lie in [0, 1]");
    if (!(params.zz_factor > 0.0)) throw InputError("zz_factor must be positive");
    RealMatrix h = build_mixer(g.n_vertices());
    const double mix = 1.0 - params.s;
    for (double& x : h.data()) x *= mix;
    const DiagonalProblem p = build_problem_diagonal(g);
    for (std::size_t v = 0; v < p.diag.size(); ++v) h(v, v) += params.s * params.zz_factor * p.diag[v];
    return h;
}

EigenDecomposition<double> exact_spectrum(const RealMatrix& h, bool want_vectors) {
    if (h.rows() != h.cols()) throw InputError("exact_spectrum: matrix is not square");
    if (h.rows() > (std::size_t{1} << kMaxDenseQubits)) throw BudgetError("exact_spectrum: dimension over budget");
    return jacobi_eigen(h, want_vectors);
}

ComplexMatrix exact_unitary(const EigenDecomposition<double>& eig, double t) {
    if (!eig.vectors) throw InputError("exact_unitary: decomposition has no eigenvectors");
    const RealMatrix& v = *eig.vectors;
    const std::size_t n = v.rows();
    std::vector<Complex> phases(n);
    for (std::size_t k = 0; k < n; ++k) phases[k] = std::polar(1.0, t * eig.values[k]);
    ComplexMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex sum{};
            for (std::size_t k = 0; k < n; ++k) sum += v(i, k) * phases[k] * v(j, k);
            u(i, j) = sum;
        }
    }
    return u;
}

ComplexMatrix exact_unitary(const RealMatrix& h, double t) { return exact_unitary(exact_spectrum(h, true), t); }

}  // namespace qaa
