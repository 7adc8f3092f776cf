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
#include "qaa/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <type_traits>

#include "qaa/error.hpp"

namespace qaa {

namespace {

double conj(double x) { return x; }
Complex conj(const Complex& x) { return std::conj(x); }
double real_part(double x) { return x; }
double real_part(const Complex& x) { return x.real(); }

template <class T>
void require_square(const Matrix<T>& m, const char* what) {
    if (m.rows() != m.cols()) throw InputError(std::string(what) + ": matrix is not square");
}

}  // namespace

ComplexMatrix to_complex(const RealMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    std::copy(m.data().begin(), m.data().end(), out.data().begin());
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
    }
    return out;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("multiply: shape mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("subtract: shape mismatch");
    ComplexMatrix out = a;
    for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] -= b.data()[k];
    return out;
}

double max_abs(const RealMatrix& m) {
    double best = 0;
    for (double x : m.data()) best = std::max(best, std::abs(x));
    return best;
}

double max_abs(const ComplexMatrix& m) {
    double best = 0;
    for (const Complex& x : m.data()) best = std::max(best, std::abs(x));
    return best;
}

double frobenius_norm(const RealMatrix& m) {
    double s = 0;
    for (double x : m.data()) s += x * x;
    return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0;
    for (const Complex& x : m.data()) s += std::norm(x);
    return std::sqrt(s);
}

double unitarity_defect(const ComplexMatrix& u) {
    require_square(u, "unitarity_defect");
    const std::size_t n = u.rows();
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex dot{};
            for (std::size_t k = 0; k < n; ++k) dot += std::conj(u(k, i)) * u(k, j);
            if (i == j) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

double operator_norm(const ComplexMatrix& m) {
    const ComplexMatrix gram = multiply(adjoint(m), m);
    const auto eig = jacobi_eigen(gram, false);
    return eig.values.empty() ? 0.0 : std::sqrt(std::max(0.0, eig.values.back()));
}

Complex determinant(ComplexMatrix m) {
    require_square(m, "determinant");
    const std::size_t n = m.rows();
    Complex det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
        }
        if (m(pivot, col) == Complex{}) return {};
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        const Complex p = m(col, col);
        det *= p;
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = m(r, col) / p;
            if (f == Complex{}) continue;
            for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

template <class T>
EigenDecomposition<T> jacobi_eigen(Matrix<T> a, bool want_vectors, const JacobiOptions& opts) {
    require_square(a, "jacobi_eigen");
    const std::size_t n = a.rows();
    std::optional<Matrix<T>> v;
    if (want_vectors) v = Matrix<T>::identity(n);

    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) s += 2 * std::norm(a(i, j));
        }
        return std::sqrt(s);
    };
    double total = 0;
    for (const T& x : a.data()) total += std::norm(x);
    const double threshold = opts.tolerance * std::max(1.0, std::sqrt(total));

    int sweep = 0;
    while (off_norm() > threshold) {
        if (++sweep > opts.max_sweeps) {
            throw NumericalError("Jacobi eigensolver did not converge in " + std::to_string(opts.max_sweeps) +
                                 " sweeps (dimension " + std::to_string(n) + ")");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const T apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = real_part(a(p, p));
                const double aqq = real_part(a(q, q));
                // Rotation J = diag(1, conj(phase)) * [[c, s], [-s, c]] makes the
                // (p, q) entry of J^dagger A J vanish.
                const T phase = apq / mag;
                const double theta = (aqq - app) / (2.0 * mag);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const T jpp = T{c};
                const T jpq = T{s};
                const T jqp = -s * conj(phase);
                const T jqq = c * conj(phase);

                // A <- A J (columns p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const T akp = a(k, p);
                    const T akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                // A <- J^dagger A (rows p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const T apk = a(p, k);
                    const T aqk = a(q, k);
                    a(p, k) = conj(jpp) * apk + conj(jqp) * aqk;
                    a(q, k) = conj(jpq) * apk + conj(jqq) * aqk;
                }
                a(p, q) = T{};
                a(q, p) = T{};
                a(p, p) = T{real_part(a(p, p))};
                a(q, q) = T{real_part(a(q, q))};
                if (v) {
                    Matrix<T>& vm = *v;
                    for (std::size_t k = 0; k < n; ++k) {
                        const T vkp = vm(k, p);
                        const T vkq = vm(k, q);
                        vm(k, p) = vkp * jpp + vkq * jqp;
                        vm(k, q) = vkp * jpq + vkq * jqq;
                    }
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return real_part(a(x, x)) < real_part(a(y, y)); });

    EigenDecomposition<T> out;
    out.values.reserve(n);
    for (std::size_t k : order) out.values.push_back(real_part(a(k, k)));
    if (v) {
        Matrix<T> sorted(n, n);
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t r = 0; r < n; ++r) sorted(r, col) = (*v)(r, order[col]);
        }
        out.vectors = std::move(sorted);
    }
    return out;
}

template EigenDecomposition<double> jacobi_eigen(Matrix<double>, bool, const JacobiOptions&);
template EigenDecomposition<Complex> jacobi_eigen(Matrix<Complex>, bool, const JacobiOptions&);

std::vector<std::pair<std::size_t, std::size_t>> cluster_sorted(const std::vector<double>& sorted, double tol) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t begin = 0;
    for (std::size_t k = 1; k <= sorted.size(); ++k) {
        if (k == sorted.size() || sorted[k] - sorted[k - 1] > tol) {
            out.emplace_back(begin, k);
            begin = k;
        }
    }
    return out;
}

}  // namespace qaa
