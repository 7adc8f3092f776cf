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
#include "qaa/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qaa/error.hpp"
#include "qaa/parallel.hpp"

namespace qaa {

Graph::Graph(unsigned n_vertices, const std::vector<std::pair<unsigned, unsigned>>& edges)
    : n_vertices_(n_vertices) {
    if (n_vertices == 0) throw InputError("graph must have at least one vertex");
    if (n_vertices > 63) throw BudgetError("graph has more than 63 vertices");
    edges_.reserve(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [a, b] = edges[k];
        const std::string where = "edges[" + std::to_string(k) + "]";
        if (a >= n_vertices || b >= n_vertices) {
            throw InputError(where + ": vertex index out of range (" + std::to_string(std::max(a, b)) +
                             " >= " + std::to_string(n_vertices) + ")");
        }
        if (a == b) throw InputError(where + ": self-loop on vertex " + std::to_string(a));
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw InputError("duplicate edge (" + std::to_string(dup->u) + ", " + std::to_string(dup->v) + ")");
    }
}

std::string to_msb_string(std::uint64_t word, unsigned n) {
    std::string s(n, '0');
    for (unsigned i = 0; i < n; ++i) {
        if ((word >> i) & 1U) s[n - 1 - i] = '1';
    }
    return s;
}

std::uint64_t from_msb_string(std::string_view bits) {
    if (bits.size() > 64) throw InputError("bit string longer than 64");
    std::uint64_t word = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw InputError("invalid bit character '" + std::string(1, c) + "'");
        word = (word << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return word;
}

Partition complement(const Partition& p) {
    const std::uint64_t mask = p.n_vertices >= 64 ? ~0ULL : ((1ULL << p.n_vertices) - 1);
    return {p.n_vertices, ~p.word & mask};
}

unsigned cut_value_of_word(const Graph& g, std::uint64_t word) noexcept {
    unsigned cut = 0;
    for (const Edge& e : g.edges()) cut += static_cast<unsigned>(((word >> e.u) ^ (word >> e.v)) & 1U);
    return cut;
}

unsigned cut_value(const Graph& g, const Partition& p) {
    if (p.n_vertices != g.n_vertices()) {
        throw InputError("partition length " + std::to_string(p.n_vertices) + " does not match " +
                         std::to_string(g.n_vertices()) + " vertices");
    }
    return cut_value_of_word(g, p.word);
}

MaxCutSolution brute_force_maxcut(const Graph& g) {
    const unsigned n = g.n_vertices();
    if (n > kMaxBruteForceVertices) {
        throw BudgetError("brute force limited to " + std::to_string(kMaxBruteForceVertices) + " vertices, got " +
                          std::to_string(n));
    }
    const std::uint64_t total = 1ULL << n;
    struct Partial {
        unsigned best = 0;
        std::vector<std::uint64_t> words;
    };
    std::vector<Partial> partials(chunk_count(total, 1 << 12));
    parallel_chunks(
        total,
        [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            Partial& p = partials[chunk];
            for (std::uint64_t w = begin; w < end; ++w) {
                const unsigned c = cut_value_of_word(g, w);
                if (c > p.best) {
                    p.best = c;
                    p.words.clear();
                }
                if (c == p.best) p.words.push_back(w);
            }
        },
        1 << 12);

    MaxCutSolution out;
    for (const auto& p : partials) out.max_cut = std::max(out.max_cut, p.best);
    // Chunks cover ascending ranges, so concatenation keeps ascending order.
    for (const auto& p : partials) {
        if (p.best != out.max_cut) continue;
        for (std::uint64_t w : p.words) out.solutions.push_back({n, w});
    }
    return out;
}

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

unsigned as_index(const nlohmann::json& v, const std::string& field) {
    if (!v.is_number_integer()) throw InputError(field + ": expected an integer");
    const auto x = v.get<long long>();
    if (x < 0) throw InputError(field + ": negative value " + std::to_string(x));
    if (x > 1'000'000) throw InputError(field + ": value " + std::to_string(x) + " is out of range");
    return static_cast<unsigned>(x);
}

}  // namespace

Graph parse_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed graph JSON at line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
    }
    if (!doc.is_object()) throw InputError("graph JSON: top level must be an object");
    if (!doc.contains("vertices")) throw InputError("graph JSON: missing field \"vertices\"");
    if (!doc.contains("edges")) throw InputError("graph JSON: missing field \"edges\"");
    for (const auto& [key, _] : doc.items()) {
        if (key != "vertices" && key != "edges") throw InputError("graph JSON: unknown field \"" + key + "\"");
    }
    const unsigned n = as_index(doc["vertices"], "vertices");
    const auto& edges = doc["edges"];
    if (!edges.is_array()) throw InputError("edges: expected an array");
    std::vector<std::pair<unsigned, unsigned>> pairs;
    pairs.reserve(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string field = "edges[" + std::to_string(k) + "]";
        const auto& e = edges[k];
        if (!e.is_array() || e.size() != 2) throw InputError(field + ": expected a pair [i, j]");
        pairs.emplace_back(as_index(e[0], field + "[0]"), as_index(e[1], field + "[1]"));
    }
    return Graph(n, pairs);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_graph(buf.str());
    } catch (const BudgetError&) {
        throw;
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = g.n_vertices();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    doc["edges"] = edges;
    return doc.dump();
}

}  // namespace qaa
