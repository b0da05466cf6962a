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

#ifndef WORDREP_CATALOG_HPP_
#define WORDREP_CATALOG_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

struct GoldenWord {
  Word word;
  int k = 0;
  std::optional<int> uniformity;  // expected t when the word is uniform
  bool derived = false;           // produced by this toolkit rather than transcribed
};

struct NamedSubset {
  std::string name;
  VertexSet vertices;
  Graph induces;  // expected induced subgraph up to isomorphism
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Graph graph;
  std::vector<GoldenWord> golden_words;
  // Orientations are of `graph` plus `added_edges`.
  std::vector<Orientation> golden_orientations;
  std::vector<Edge> added_edges;
  std::vector<NamedSubset> special_subsets;
};

// Fixed entries, followed by the parametric families
// cycle:n, complete:n, empty:n, path:n, wheel:n and mycielski-c:n.
std::vector<std::string> catalog_names();

CatalogEntry catalog_get(std::string_view name);

struct CatalogCheck {
  std::string entry;
  std::string item;
  bool passed = false;
  std::string detail;
};

std::vector<CatalogCheck> verify_entry(const CatalogEntry& entry);

struct CatalogReport {
  std::vector<CatalogCheck> checks;
  bool all_passed() const;
};

CatalogReport verify_catalog();

}  // namespace wordrep

#endif  // WORDREP_CATALOG_HPP_
