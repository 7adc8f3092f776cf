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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qaa {

/// Undirected edge stored as (min, max).
struct Edge {
    unsigned u = 0;
    unsigned v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n_vertices-1.
///
/// Invariants (checked by the constructor): no self-loops, no duplicate
/// edges, every endpoint in range. Edges are normalized to (min, max) and
/// sorted.
class Graph {
   public:
    Graph(unsigned n_vertices, const std::vector<std::pair<unsigned, unsigned>>& edges);

    unsigned n_vertices() const noexcept { return n_vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t n_edges() const noexcept { return edges_.size(); }

    friend bool operator==(const Graph&, const Graph&) = default;

   private:
    unsigned n_vertices_;
    std::vector<Edge> edges_;
};

/// Assignment of every vertex to one side of a cut. Bit i of `word` is the
/// side of vertex i (0 = V1, 1 = V2); bit 0 is the least significant bit and
/// doubles as the computational-basis index of the encoded qubit state.
struct Partition {
    unsigned n_vertices = 0;
    std::uint64_t word = 0;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Renders a bit word MSB-first: character k is bit (n - 1 - k).
std::string to_msb_string(std::uint64_t word, unsigned n);

/// Inverse of to_msb_string. Throws InputError on characters other than 0/1.
std::uint64_t from_msb_string(std::string_view bits);

Partition complement(const Partition& p);

/// Number of edges whose endpoints lie on different sides.
/// Throws InputError when the partition length does not match the graph.
unsigned cut_value(const Graph& g, const Partition& p);

/// cut_value without the length check; `word` is a basis index.
unsigned cut_value_of_word(const Graph& g, std::uint64_t word) noexcept;

inline constexpr unsigned kMaxBruteForceVertices = 24;

struct MaxCutSolution {
    unsigned max_cut = 0;
    /// Optimal partitions in ascending order of their bit word.
    std::vector<Partition> solutions;

    std::size_t degeneracy() const noexcept { return solutions.size(); }
};

/// Exhaustive enumeration of all 2^n partitions.
/// Throws BudgetError above kMaxBruteForceVertices vertices.
MaxCutSolution brute_force_maxcut(const Graph& g);

/// Parses the JSON graph format {"vertices": n, "edges": [[i, j], ...]}.
/// Throws InputError with line or field context on any defect.
Graph parse_graph(std::string_view text);

/// Reads and parses a graph file. Throws InputError if it cannot be read.
Graph load_graph(const std::string& path);

/// Serializes in the same JSON format parse_graph accepts.
std::string graph_to_json(const Graph& g);

}  // namespace qaa
