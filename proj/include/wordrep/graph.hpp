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

#ifndef WORDREP_GRAPH_HPP_
#define WORDREP_GRAPH_HPP_

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace wordrep {

// Dense vertex index inside a graph, in [0, n).
using VertexId = int;

// Unordered vertex pair. Graph::edges() always reports u < v.
using Edge = std::pair<VertexId, VertexId>;

// Subset of the vertices of a graph of known order.
using VertexSet = boost::dynamic_bitset<>;

std::vector<VertexId> members(const VertexSet& set);

// Ordered list of unique vertex labels with a label -> index map. Labels are
// non-empty tokens without whitespace. Shared between a graph and the words
// written over it.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> labels);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<VertexId> find(std::string_view label) const;
  // Throws InputError for unknown labels.
  VertexId index(std::string_view label) const;

  // True when every label is a single character, so words can be printed
  // without separators.
  bool single_character() const noexcept { return single_char_; }

  // Same labels, possibly in a different order.
  bool same_labels(const Alphabet& other) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  bool single_char_ = true;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> labels);
// Labels "1", "2", ..., "n".
AlphabetPtr numbered_alphabet(int n, std::string_view prefix = "");

// Labeled simple undirected graph with bitset adjacency rows. Immutable after
// construction; the free functions below return new graphs.
class Graph {
 public:
  Graph();
  // Throws InputError on self-loops or out-of-range endpoints. Repeated
  // edges are merged.
  Graph(AlphabetPtr alphabet, std::span<const Edge> edges);
  Graph(AlphabetPtr alphabet, std::initializer_list<Edge> edges)
      : Graph(std::move(alphabet), std::span<const Edge>(edges.begin(), edges.size())) {}

  // Builds a graph from label pairs, e.g. {{"1", "2"}, {"2", "3"}}.
  static Graph from_labels(
      std::vector<std::string> labels,
      std::span<const std::pair<std::string, std::string>> edges);
  static Graph from_labels(
      std::vector<std::string> labels,
      std::initializer_list<std::pair<std::string, std::string>> edges) {
    return from_labels(std::move(labels),
                       std::span<const std::pair<std::string, std::string>>(
                           edges.begin(), edges.size()));
  }

  int order() const noexcept { return alphabet_->size(); }
  std::size_t size() const noexcept { return edge_count_; }

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::string& label(VertexId v) const { return alphabet_->label(v); }
  VertexId index(std::string_view label) const { return alphabet_->index(label); }

  bool adjacent(VertexId u, VertexId v) const { return adj_[u][v]; }
  const VertexSet& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].count()); }

  // All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all_vertices() const;
  // Set from labels; throws InputError on unknown labels.
  VertexSet vertex_set(std::span<const std::string> labels) const;
  VertexSet vertex_set(std::initializer_list<std::string> labels) const {
    return vertex_set(std::span<const std::string>(labels.begin(), labels.size()));
  }

  // Equality of labeled graphs: same label set and the same edges between
  // equally labeled vertices. Vertex order is irrelevant.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

// N_A(v): the members of `within` adjacent to v.
VertexSet neighbors_in(const Graph& g, VertexId v, const VertexSet& within);

// G[S]. Vertices keep their labels and relative order.
Graph induced_subgraph(const Graph& g, const VertexSet& subset);
// G \ v.
Graph remove_vertex(const Graph& g, VertexId v);

Graph with_edges(const Graph& g, std::span<const Edge> extra);
Graph without_edges(const Graph& g, std::span<const Edge> removed);
Graph complement(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

Graph complete_graph(int n);
Graph empty_graph(int n);
// Cycle on labels prefix1 ... prefixn with edges i ~ i+1 and n ~ 1.
Graph cycle_graph(int n, std::string_view prefix = "");
Graph path_graph(int n);
// Hub "0" joined to every vertex of the cycle "1".."n".
Graph wheel_graph(int n);

}  // namespace wordrep

#endif  // WORDREP_GRAPH_HPP_
