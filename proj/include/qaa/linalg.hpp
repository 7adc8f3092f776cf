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
#include <cstddef>
#include <optional>
#include <vector>

namespace qaa {

using Complex = std::complex<double>;

/// Dense row-major matrix.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::vector<T>& data() noexcept { return data_; }
    const std::vector<T>& data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

ComplexMatrix to_complex(const RealMatrix& m);
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest absolute entry.
double max_abs(const RealMatrix& m);
double max_abs(const ComplexMatrix& m);

/// Frobenius norm.
double frobenius_norm(const RealMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

/// max |(U^dagger U - I)_{ij}|.
double unitarity_defect(const ComplexMatrix& u);

/// Spectral norm (largest singular value).
double operator_norm(const ComplexMatrix& m);

/// Determinant by LU decomposition with partial pivoting.
Complex determinant(ComplexMatrix m);

struct JacobiOptions {
    /// Converged when the off-diagonal Frobenius norm falls below
    /// tolerance * max(1, ||A||_F).
    double tolerance = 1e-12;
    int max_sweeps = 100;
};

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues ascending;
/// column k of `vectors` is the eigenvector for values[k].
template <class T>
struct EigenDecomposition {
    std::vector<double> values;
    std::optional<Matrix<T>> vectors;
};

/// Cyclic Jacobi eigensolver for real symmetric (T = double) or complex
/// Hermitian (T = Complex) matrices. Only the upper triangle is trusted to
/// be the conjugate of the lower one; asymmetric input gives garbage.
/// Throws NumericalError when max_sweeps is exhausted and InputError for a
/// non-square matrix.
template <class T>
EigenDecomposition<T> jacobi_eigen(Matrix<T> a, bool want_vectors, const JacobiOptions& opts = {});

extern template EigenDecomposition<double> jacobi_eigen(Matrix<double>, bool, const JacobiOptions&);
extern template EigenDecomposition<Complex> jacobi_eigen(Matrix<Complex>, bool, const JacobiOptions&);

/// Groups sorted values into runs whose consecutive gaps are <= tol.
/// Returns [begin, end) index ranges.
std::vector<std::pair<std::size_t, std::size_t>> cluster_sorted(const std::vector<double>& sorted, double tol);

}  // namespace qaa
