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
#include <random>
#include <utility>
#include <vector>

#include "qaa/graph.hpp"

namespace qaa::testing {

/// The five-vertex example graph: C = 5, D = 2.
inline Graph fan_graph() { return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}); }

/// Square 0-3-4-1 with roof 0-1-2: C = 5, D = 4.
inline Graph house_graph() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {3, 4}}); }

/// Triangle 0-1-2 with pendants 3 and 4 on vertex 0: C = 4, D = 6.
inline Graph triangle_two_pendants() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}}); }

inline Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

inline Graph edgeless(unsigned n) { return Graph(n, {}); }

/// Erdos-Renyi graph with edge probability p.
inline Graph random_graph(unsigned n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution keep(p);
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            if (keep(rng)) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

}  // namespace qaa::testing
