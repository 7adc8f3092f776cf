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


#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "qaa/error.hpp"
#include "qaa/hamiltonian.hpp"

using namespace qaa;
using qaa::testing::fan_graph;

namespace {

std::size_t count_near(const std::vector<double>& values, double target, double tol = 1e-8) {
    std::size_t c = 0;
    for (double v : values) c += std::abs(v - target) <= tol;
    return c;
}

}  // namespace

TEST(problem_diagonal, examples) {
    const DiagonalProblem p = build_problem_diagonal(fan_graph());
    EXPECT_EQ(p.diag[from_msb_string("01010")], -5.0);
    EXPECT_EQ(p.diag[0], 0.0);
    EXPECT_EQ(build_problem_diagonal(Graph(2, {{0, 1}})).diag[from_msb_string("01")], -1.0);
}

TEST(problem_diagonal, invariants) {
    std::mt19937_64 rng(21);
    for (unsigned n = 1; n <= 10; ++n) {
        const Graph g = qaa::testing::random_graph(n, 0.5, rng);
        const DiagonalProblem p = build_problem_diagonal(g);
        const std::uint64_t mask = (1ULL << n) - 1;
        EXPECT_EQ(p.diag[0], 0.0);
        for (std::uint64_t v = 0; v <= mask; ++v) {
            ASSERT_LE(p.diag[v], 0.0);
            ASSERT_GE(p.diag[v], -static_cast<double>(g.n_edges()));
            ASSERT_EQ(p.diag[v], p.diag[~v & mask]);
        }
    }
}

TEST(problem_diagonal, budget) { EXPECT_THROW(build_problem_diagonal(qaa::testing::edgeless(15)), BudgetError); }

TEST(mixer, single_qubit_is_minus_x) {
    const RealMatrix h = build_mixer(1);
    EXPECT_EQ(h(0, 0), 0.0);
    EXPECT_EQ(h(0, 1), -1.0);
    EXPECT_EQ(h(1, 0), -1.0);
    EXPECT_EQ(h(1, 1), 0.0);
}

TEST(mixer, two_qubit_spectrum) {
    const auto eig = exact_spectrum(build_mixer(2));
    const std::vector<double> expected{-2, 0, 0, 2};
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(eig.values[k], expected[k], 1e-12);
}

TEST(mixer, binomial_levels_and_uniform_ground_state) {
    const auto eig = exact_spectrum(build_mixer(5), true);
    EXPECT_NEAR(eig.values[0], -5.0, 1e-10);
    EXPECT_EQ(count_near(eig.values, -5.0), 1u);
    EXPECT_EQ(count_near(eig.values, -3.0), 5u);
    EXPECT_EQ(count_near(eig.values, -1.0), 10u);
    const RealMatrix& v = *eig.vectors;
    const double amp = 1.0 / std::sqrt(32.0);
    for (std::size_t r = 0; r < 32; ++r) EXPECT_NEAR(std::abs(v(r, 0)), amp, 1e-10);
}

TEST(mixer, entries_follow_hamming_distance) {
    const RealMatrix h = build_mixer(4);
    for (std::size_t v = 0; v < 16; ++v) {
        for (std::size_t w = 0; w < 16; ++w) {
            const int dist = std::popcount(v ^ w);
            EXPECT_EQ(h(v, w), dist == 1 ? -1.0 : 0.0);
        }
    }
    EXPECT_THROW(build_mixer(0), InputError);
    EXPECT_THROW(build_mixer(15), BudgetError);
}

TEST(interpolate, endpoints_and_midpoint) {
    const Graph g = fan_graph();
    EXPECT_EQ(interpolate(g, {0.0, 1.0}), build_mixer(5));
    EXPECT_EQ(interpolate(g, {1.0, 1.0}), to_matrix(build_problem_diagonal(g)));
    const RealMatrix mid = interpolate(g, {0.5, 1.0});
    const RealMatrix a = build_mixer(5);
    const RealMatrix b = to_matrix(build_problem_diagonal(g));
    for (std::size_t k = 0; k < mid.data().size(); ++k) {
        EXPECT_DOUBLE_EQ(mid.data()[k], 0.5 * (a.data()[k] + b.data()[k]));
    }
    EXPECT_THROW(interpolate(g, {1.5, 1.0}), InputError);
    EXPECT_THROW(interpolate(g, {0.5, 0.0}), InputError);
}

TEST(exact_spectrum, problem_ground_level_is_max_cut) {
    const auto eig = exact_spectrum(to_matrix(build_problem_diagonal(fan_graph())));
    EXPECT_NEAR(eig.values[0], -5.0, 1e-12);
    EXPECT_EQ(count_near(eig.values, -5.0), 2u);
}

TEST(exact_spectrum, ground_level_matches_oracle_on_random_graphs) {
    std::mt19937_64 rng(5);
    for (unsigned n = 1; n <= 10; ++n) {
        for (int rep = 0; rep < 3; ++rep) {
            const Graph g = qaa::testing::random_graph(n, 0.5, rng);
            const MaxCutSolution sol = brute_force_maxcut(g);
            const auto eig = exact_spectrum(to_matrix(build_problem_diagonal(g)));
            const double ground = -static_cast<double>(sol.max_cut);
            ASSERT_NEAR(eig.values[0], ground, 1e-12);
            ASSERT_EQ(count_near(eig.values, ground), sol.degeneracy());
        }
    }
}

TEST(exact_spectrum, one_by_one_and_residuals) {
    EXPECT_EQ(exact_spectrum(RealMatrix(1, 1, 4.0)).values, std::vector<double>{4.0});
    const RealMatrix h = interpolate(fan_graph(), {0.37, 2.0});
    const auto eig = exact_spectrum(h, true);
    const double norm = frobenius_norm(h);
    const RealMatrix& v = *eig.vectors;
    for (std::size_t k = 0; k < h.rows(); ++k) {
        double r2 = 0;
        for (std::size_t i = 0; i < h.rows(); ++i) {
            double hv = 0;
            for (std::size_t j = 0; j < h.cols(); ++j) hv += h(i, j) * v(j, k);
            r2 += std::pow(hv - eig.values[k] * v(i, k), 2);
        }
        EXPECT_LE(std::sqrt(r2), 1e-10 * norm);
    }
}

TEST(exact_spectrum, lipschitz_continuity_in_s) {
    const Graph g = fan_graph();
    const double zz = 2.0;
    const std::size_t n_s = 50;
    const double lipschitz = 5.0 + zz * static_cast<double>(g.n_edges());
    std::vector<double> prev = exact_spectrum(interpolate(g, {0.0, zz})).values;
    for (std::size_t k = 1; k < n_s; ++k) {
        const double s = static_cast<double>(k) / (n_s - 1);
        const std::vector<double> cur = exact_spectrum(interpolate(g, {s, zz})).values;
        for (std::size_t j = 0; j < cur.size(); ++j) {
            ASSERT_LE(std::abs(cur[j] - prev[j]), lipschitz / (n_s - 1) + 1e-9);
        }
        prev = cur;
    }
}

TEST(exact_spectrum, rank_obstruction) {
    for (const Graph& g : {fan_graph(), qaa::testing::house_graph(), qaa::testing::triangle_two_pendants(),
                           qaa::testing::triangle()}) {
        const double n = g.n_vertices();
        const MaxCutSolution sol = brute_force_maxcut(g);
        const double zz = kDefaultZZFactor;
        const auto start = exact_spectrum(interpolate(g, {0.0, zz})).values;
        const auto end = exact_spectrum(interpolate(g, {1.0, zz})).values;
        const double mid_start = -n + 1;
        const double mid_end = zz * (-static_cast<double>(sol.max_cut) + 0.5);
        const auto below = [](const std::vector<double>& v, double x) {
            return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [x](double y) { return y < x; }));
        };
        EXPECT_EQ(below(start, mid_start), 1u);
        EXPECT_EQ(below(end, mid_end), sol.degeneracy());
        EXPECT_NE(below(start, mid_start), below(end, mid_end));
    }
}

TEST(exact_unitary, identity_at_zero_time) {
    const ComplexMatrix u = exact_unitary(interpolate(fan_graph(), {0.4, 2.0}), 0.0);
    EXPECT_LE(max_abs(subtract(u, ComplexMatrix::identity(32))), 1e-12);
}

TEST(exact_unitary, diagonal_phases) {
    const DiagonalProblem p = build_problem_diagonal(fan_graph());
    const ComplexMatrix u = exact_unitary(to_matrix(p), 0.7);
    for (std::size_t v = 0; v < 32; ++v) {
        EXPECT_LE(std::abs(u(v, v) - std::polar(1.0, 0.7 * p.diag[v])), 1e-12);
    }
}

TEST(exact_unitary, minus_x_quarter_turn) {
    const ComplexMatrix u = exact_unitary(build_mixer(1), std::numbers::pi / 2);
    // exp(i (pi/2) (-X)) = -i X
    EXPECT_LE(std::abs(u(0, 0)), 1e-12);
    EXPECT_LE(std::abs(u(0, 1) - Complex{0, -1}), 1e-12);
    EXPECT_LE(std::abs(u(1, 0) - Complex{0, -1}), 1e-12);
    // Zero trace, unit determinant.
    EXPECT_LE(std::abs(u(0, 0) + u(1, 1)), 1e-12);
    EXPECT_LE(std::abs(determinant(u) - Complex{1, 0}), 1e-12);
}

TEST(exact_unitary, unitary_and_commutes_with_generator) {
    const RealMatrix h = interpolate(fan_graph(), {0.6, 2.0});
    const ComplexMatrix u = exact_unitary(h, 5.0);
    EXPECT_LE(unitarity_defect(u), 1e-10);
    const ComplexMatrix hc = to_complex(h);
    EXPECT_LE(max_abs(subtract(multiply(hc, u), multiply(u, hc))), 1e-9);
}
