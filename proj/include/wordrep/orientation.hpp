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

#ifndef WORDREP_ORIENTATION_HPP_
#define WORDREP_ORIENTATION_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/search_result.hpp"

namespace wordrep {

// Directed edge tail -> head.
using Arc = std::pair<VertexId, VertexId>;

// A direction for every edge of a base graph.
class Orientation {
 public:
  // Throws InputError unless the arcs cover every base edge exactly once and
  // nothing else (no non-edges, no duplicates, no antiparallel pairs).
  Orientation(Graph base, std::span<const Arc> arcs);
  static Orientation from_labels(Graph base,
                                 std::span<const std::pair<std::string, std::string>> arcs);

  const Graph& base() const noexcept { return base_; }
  int order() const noexcept { return base_.order(); }
  bool has_arc(VertexId from, VertexId to) const { return out_[from][to]; }
  const VertexSet& out(VertexId v) const { return out_[v]; }
  const VertexSet& in(VertexId v) const { return in_[v]; }

  // Sorted by (tail, head).
  std::vector<Arc> arcs() const;

  // Same orientation with one arc reversed. Throws InputError if absent.
  Orientation reversed_arc(Arc arc) const;

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.base_ == b.base_ && a.out_ == b.out_;
  }

 private:
  Graph base_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// Orientation of G[S].
Orientation restrict_orientation(const Orientation& d, const VertexSet& subset);

bool is_acyclic(const Orientation& d);
std::optional<std::vector<VertexId>> topological_order(const Orientation& d);

// Descendant sets: reach[v] holds every vertex reachable from v by a
// non-empty directed path. Throws PreconditionError on a cycle.
std::vector<VertexSet> reachability(const Orientation& d);

// Directed path v0 -> ... -> vk (k >= 3) with the shortcutting arc v0 -> vk
// and a pair on the path that is not joined by an arc.
struct ShortcutWitness {
  std::vector<VertexId> path;
  std::pair<VertexId, VertexId> missing;
};

// For every arc a -> b, every pair u ~> w inside the set of vertices lying
// on a ~> b paths must be adjacent. The first violation in arc order is
// reported. Throws PreconditionError if `d` has a cycle.
std::optional<ShortcutWitness> find_shortcut(const Orientation& d);

bool is_semi_transitive(const Orientation& d);
bool is_transitive(const Orientation& d);

// All directed simple paths with exactly `arcs` arcs, lexicographic in
// vertex index. Throws PreconditionError on a cycle.
std::vector<std::vector<VertexId>> directed_paths_with_arcs(const Orientation& d, int arcs);

// Directs every edge from the smaller colour to the larger one. Throws
// InputError if `colors` is not a proper colouring.
Orientation orient_by_coloring(const Graph& g, std::span<const int> colors);

// Backtracking over edge directions with incremental reachability, forced
// arcs and shortcut pruning. Graphs up to 64 vertices. Deterministic.
SearchResult<Orientation> search_semi_transitive(const Graph& g,
                                                 std::uint64_t node_budget = kUnlimited);

// Backtracking with implication forcing. Graphs up to 64 vertices.
SearchResult<Orientation> search_transitive(const Graph& g,
                                            std::uint64_t node_budget = kUnlimited);

}  // namespace wordrep

#endif  // WORDREP_ORIENTATION_HPP_
