// Copyright 2026 The wordrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WORDREP_CANONICAL_HPP_
#define WORDREP_CANONICAL_HPP_

#include <cstdint>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Largest order handled by the canonical code (55 bits fit in 64).
inline constexpr int kMaxCanonicalOrder = 11;

// Largest order for the built-in enumerator.
inline constexpr int kMaxEnumerationOrder = 8;

// Upper-triangle adjacency bits in column order (01, 02, 12, 03, ...), the
// first pair in the most significant position.
std::uint64_t adjacency_code(const Graph& g);

// Canonical labeling: minimises adjacency_code over the labelings that keep
// colour-refinement cells in their canonical order. Entry i is the vertex
// placed at position i.
std::vector<VertexId> canonical_labeling(const Graph& g);

std::uint64_t canonical_code(const Graph& g);

// Canonical relabeled copy with vertices "1".."n".
Graph canonical_graph(const Graph& g);

// Graph on vertices "1".."n" whose adjacency_code is `code`.
Graph graph_from_code(int n, std::uint64_t code);

// One graph per isomorphism class, sorted by canonical code.
std::vector<Graph> enumerate_nonisomorphic(int n, bool connected_only = false);

}  // namespace wordrep

#endif  // WORDREP_CANONICAL_HPP_
