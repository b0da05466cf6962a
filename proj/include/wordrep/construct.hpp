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

#ifndef WORDREP_CONSTRUCT_HPP_
#define WORDREP_CONSTRUCT_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/word.hpp"

// Representant constructions. Every function that returns a word checks it
// with verify_k11 against its target graph before returning and throws
// VerificationError if the check fails.

namespace wordrep {

// x and y are non-adjacent iff they appear in the same relative order in p1
// and p3 and in the opposite order in p2. Equals graph_of_word(p1 p2 p3, 1).
Graph three_perm_graph(const Permutation& p1, const Permutation& p2, const Permutation& p3);

enum class Doubling {
  repeat,          // w w
  reversed_prefix  // r(pi(w)) w
};

// 1-11-representant of the graph that `w` word-represents.
Word double_word(const Word& w, Doubling variant);

// Removes all edges inside each of the pairwise disjoint `parts` from the
// graph `g` represented by the uniform word `w`, returning
//   Pi1 Pi2 pi(w) w w          (or Pi1 Pi2 w w with `short_form`)
// where Pi1 = V1 V2 ... Vk R, Pi2 = r(V1) ... r(Vk) R, and letters inside
// each set keep their pi(w) order. The result 1-11-represents the reduced
// graph. Throws InputError if w is not uniform, does not represent g, or the
// parts overlap.
Word remove_edge_sets(const Graph& g, const Word& w, std::span<const VertexSet> parts,
                      bool short_form = false);

// `h` plus the matching `matching` is represented by the uniform word `w`;
// returns a 1-11-representant of `h`.
Word remove_matching(const Graph& h, std::span<const Edge> matching, const Word& w,
                     bool short_form = false);

// Clique a_1..a_k and independent set b_1..b_l covering a split graph.
class SplitPartition {
 public:
  // Validates the partition; throws InputError on violation.
  SplitPartition(Graph g, std::vector<VertexId> clique, std::vector<VertexId> independent);
  // Clique in the given order, independent set = the rest, ascending index.
  static SplitPartition with_clique(Graph g, std::vector<VertexId> clique);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<VertexId>& clique() const noexcept { return clique_; }
  const std::vector<VertexId>& independent() const noexcept { return independent_; }
  // N_i and O_i for clique position i (0-based), in b order.
  std::vector<VertexId> neighbors(std::size_t i) const;
  std::vector<VertexId> non_neighbors(std::size_t i) const;

 private:
  Graph graph_;
  std::vector<VertexId> clique_;
  std::vector<VertexId> independent_;
};

// The permutations w0 = (A B)(A r(B))(A B) followed by Pi_k ... Pi_0.
std::vector<Permutation> split_blocks(const SplitPartition& p);
// Permutational 1-11-representant of a split graph.
Word split_word(const SplitPartition& p);

// Linear extensions Q_1..Q_t of a transitive orientation such that every
// non-adjacent pair occurs in both orders. Q_1...Q_t word-represents the base
// graph. Throws InputError if `d` is not transitive.
std::vector<Permutation> comparability_perm_rep(const Orientation& d);

// Vertices split into A, inducing a comparability graph, and an independent
// set B.
class CompIndPartition {
 public:
  // `orientation` must be a transitive orientation of G[A] (labels as in G)
  CompIndPartition(Graph g, VertexSet comparability_part, Orientation orientation);
  // Finds the transitive orientation with search_transitive; throws
  // InputError if G[A] is not a comparability graph.
  static CompIndPartition with_independent_set(Graph g, VertexSet independent);

  const Graph& graph() const noexcept { return graph_; }
  const VertexSet& comparability_part() const noexcept { return part_a_; }
  const Orientation& orientation() const noexcept { return orientation_; }
  // A as produced after renaming: a_1..a_k with Q_1 = a_k ... a_1.
  std::vector<VertexId> clique_order() const;
  // Q_1..Q_t over the labels of G[A].
  const std::vector<Permutation>& permutations() const noexcept { return perms_; }
  std::vector<VertexId> independent() const;

 private:
  Graph graph_;
  VertexSet part_a_;
  Orientation orientation_;
  std::vector<Permutation> perms_;
};

// w0 Pi_k ... Pi_1 Pi'_1 ... Pi'_t with Pi'_i = Q_i b_1 ... b_l.
Word comp_plus_ind_word(const CompIndPartition& p);

// mu(G): vertices V, then shadows "u1".."un" (or `shadow_prefix`), then the
// apex "x". Throws InputError if a new label collides with an existing one.
Graph mycielski(const Graph& g, std::string_view shadow_prefix = "u", std::string_view apex = "x");

// v_{i+1} u_i u_{i+1} v_i for i = 1..n (indices mod n), over the labels
// v1..vn, u1..un. Its graph at k=0 is mu(C_n) minus the apex.
Word mycielski_cycle_word(int n);

}  // namespace wordrep

#endif  // WORDREP_CONSTRUCT_HPP_
