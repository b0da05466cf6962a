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

#ifndef WORDREP_SEARCH_HPP_
#define WORDREP_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/search_result.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  int max_word_length = 64;
  int max_uniformity = 64;
  // First length tried by the k-11 search; 0 means the order of the graph.
  int min_word_length = 0;
};

void validate(const SearchBudget& budget);

// Exact decision through the semi-transitive orientation search.
bool is_word_representable(const Graph& g);

// A uniform word-representant. Tries exact t-uniform search for increasing t
// first, then assembles one from a semi-transitive orientation.
SearchResult<Word> find_uniform_representant(const Graph& g, const SearchBudget& budget = {});

// Uniform word built from blocks compatible with `d`, which must be
// semi-transitive for the result to exist.
SearchResult<Word> uniform_word_from_orientation(const Orientation& d,
                                                 const SearchBudget& budget = {});

// Exact search for a t-uniform word-representant with the given t.
SearchResult<Word> find_t_uniform_representant(const Graph& g, int t,
                                               std::uint64_t node_budget = kUnlimited);

// Shortest k-11-representant by iterative deepening on the length.
SearchResult<Word> find_k11_representant(const Graph& g, int k, const SearchBudget& budget = {});

struct CensusResult {
  int n = 0;
  std::size_t examined = 0;
  std::vector<Graph> non_word_representable;
};

// Connected graphs only unless `connected_only` is false. threads == 0 uses
// the hardware concurrency.
CensusResult census_non_word_representable(int n, bool connected_only = true, unsigned threads = 0);

// Census over supplied graphs of order n, deduplicated up to isomorphism when
// n is small enough for canonical codes.
CensusResult census_of(int n, std::span<const Graph> graphs, bool connected_only = true,
                       unsigned threads = 0);

int chromatic_number(const Graph& g);

}  // namespace wordrep

#endif  // WORDREP_SEARCH_HPP_
