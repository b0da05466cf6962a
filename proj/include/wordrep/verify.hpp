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

#ifndef WORDREP_VERIFY_HPP_
#define WORDREP_VERIFY_HPP_

#include <optional>
#include <string>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

// First pair whose 11-count disagrees with the target graph. Vertex ids
// refer to the target graph.
struct PairWitness {
  VertexId x = -1;
  VertexId y = -1;
  int count = 0;
  bool expected_edge = false;
};

struct Verdict {
  bool holds = false;
  std::optional<PairWitness> witness;  // present iff !holds

  explicit operator bool() const noexcept { return holds; }
};

std::string describe(const Verdict& verdict, const Graph& g, int k);

// The graph represented by `w` at level k: xy is an edge iff
// count_pattern_11(w, x, y) <= k. Every letter must occur (InputError).
Graph graph_of_word(const Word& w, int k);

// Does `w` k-11-represent `g`? The word's alphabet must carry the same labels
// as the graph (any order). The witness is the lexicographically first
// violating pair in g's index order. Every letter must occur (InputError).
Verdict verify_k11(const Word& w, const Graph& g, int k);

bool alternates(const Word& w, VertexId x, VertexId y);

bool is_t_uniform(const Word& w, int t);
// t if every letter occurs exactly t times.
std::optional<int> uniformity(const Word& w);

// |w| is a multiple of n and each block of n letters is a permutation.
bool is_permutational(const Word& w);

// Brute-force isomorphism with degree and neighbourhood-degree pruning.
// Intended for graphs of at most ~10 vertices.
std::optional<std::vector<VertexId>> find_isomorphism(const Graph& g, const Graph& h);
bool are_isomorphic(const Graph& g, const Graph& h);

// Is G[S] isomorphic to H? Throws InputError if |S| != |V(H)|.
bool induces_copy(const Graph& g, const VertexSet& subset, const Graph& h);

}  // namespace wordrep

#endif  // WORDREP_VERIFY_HPP_
