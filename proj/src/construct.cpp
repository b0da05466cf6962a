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

#include "wordrep/construct.hpp"

#include <algorithm>
#include <string>

#include "wordrep/errors.hpp"
#include "wordrep/verify.hpp"

namespace wordrep {

namespace {

void require_verified(const Word& w, const Graph& target, int k, std::string_view what) {
  const Verdict v = verify_k11(w, target, k);
  if (!v) {
    throw VerificationError(std::string(what) + " failed self-verification: " +
                            describe(v, target, k));
  }
}

Permutation make_perm(const AlphabetPtr& alphabet, std::vector<VertexId> letters) {
  return Permutation(Word(alphabet, std::move(letters)));
}

std::vector<VertexId> reversed(std::vector<VertexId> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

void append(std::vector<VertexId>& to, const std::vector<VertexId>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

// Split construction over an explicit clique order `a`, independent order
// `b`, and the neighbour test between them. With `with_last` false the final
// permutation Pi_0 is left out.
std::vector<Permutation> split_construction(const Graph& g, const std::vector<VertexId>& a,
                                            const std::vector<VertexId>& b, bool with_last) {
  const AlphabetPtr& alphabet = g.alphabet();
  std::vector<Permutation> blocks;

  auto ab = a;
  append(ab, b);
  auto arb = a;
  append(arb, reversed(b));
  blocks.push_back(make_perm(alphabet, ab));
  blocks.push_back(make_perm(alphabet, arb));
  blocks.push_back(make_perm(alphabet, ab));

  const std::size_t k = a.size();
  if (k == 0) return blocks;

  auto n_of = [&](std::size_t i) {
    std::vector<VertexId> out;
    for (VertexId x : b)
      if (g.adjacent(a[i], x)) out.push_back(x);
    return out;
  };
  auto o_of = [&](std::size_t i) {
    std::vector<VertexId> out;
    for (VertexId x : b)
      if (!g.adjacent(a[i], x)) out.push_back(x);
    return out;
  };

  // Pi_j for j = k, k-1, ..., 1 (1-based j; a[j-1] is a_j).
  for (std::size_t j = k; j >= 1; --j) {
    std::vector<VertexId> p;
    for (std::size_t i = k; i > j; --i) p.push_back(a[i - 1]);  // a_k ... a_{j+1}
    for (std::size_t i = 1; i < j; ++i) p.push_back(a[i - 1]);  // a_1 ... a_{j-1}
    append(p, o_of(j - 1));
    p.push_back(a[j - 1]);
    append(p, n_of(j - 1));
    blocks.push_back(make_perm(alphabet, std::move(p)));
  }
  if (with_last) {
    auto last = reversed(a);
    append(last, b);
    blocks.push_back(make_perm(alphabet, std::move(last)));
  }
  return blocks;
}

Word join(std::span<const Permutation> perms) {
  std::vector<Word> words;
  words.reserve(perms.size());
  for (const auto& p : perms) words.push_back(p.word());
  return concat(words);
}

}  // namespace

Graph three_perm_graph(const Permutation& p1, const Permutation& p2, const Permutation& p3) {
  if (*p1.alphabet() != *p2.alphabet() || *p1.alphabet() != *p3.alphabet()) {
    throw InputError("permutations are over different alphabets");
  }
  const int n = p1.size();
  std::vector<Edge> edges;
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      const bool o1 = p1.before(x, y);
      const bool non_edge = p3.before(x, y) == o1 && p2.before(x, y) != o1;
      if (!non_edge) edges.emplace_back(x, y);
    }
  }
  Graph g(p1.alphabet(), edges);
  const Word w = p1.word() + p2.word() + p3.word();
  require_verified(w, g, 1, "three-permutation graph");
  return g;
}

Word double_word(const Word& w, Doubling variant) {
  const Graph target = graph_of_word(w, 0);
  Word out = variant == Doubling::repeat ? w + w : reverse(initial_permutation(w).word()) + w;
  require_verified(out, target, 1, "doubled word");
  return out;
}

Word remove_edge_sets(const Graph& g, const Word& w_in, std::span<const VertexSet> parts,
                      bool short_form) {
  if (!w_in.alphabet()->same_labels(*g.alphabet())) {
    throw InputError("word alphabet does not match the graph's vertices");
  }
  const Word w = relabel(w_in, g.alphabet());
  if (!uniformity(w) || w.empty()) throw InputError("edge-set removal needs a uniform word");
  if (!verify_k11(w, g, 0)) throw InputError("word does not represent the graph");

  VertexSet covered = g.empty_set();
  for (const auto& part : parts) {
    if (part.size() != covered.size()) throw InputError("part size does not match graph order");
    if (part.intersects(covered)) throw InputError("parts are not pairwise disjoint");
    covered |= part;
  }

  const Permutation pi = initial_permutation(w);
  auto in_pi_order = [&](const VertexSet& s) {
    std::vector<VertexId> out;
    for (VertexId v : pi.word().letters())
      if (s[v]) out.push_back(v);
    return out;
  };
  std::vector<VertexId> first, second;
  std::vector<Edge> removed;
  for (const auto& part : parts) {
    const auto ordered = in_pi_order(part);
    append(first, ordered);
    append(second, reversed(ordered));
    for (std::size_t i = 0; i < ordered.size(); ++i)
      for (std::size_t j = i + 1; j < ordered.size(); ++j)
        if (g.adjacent(ordered[i], ordered[j])) removed.emplace_back(ordered[i], ordered[j]);
  }
  const auto rest = in_pi_order(~covered);
  append(first, rest);
  append(second, rest);

  const Graph h = without_edges(g, removed);
  std::vector<Word> pieces{make_perm(g.alphabet(), first).word(),
                           make_perm(g.alphabet(), second).word()};
  if (!short_form) pieces.push_back(pi.word());
  pieces.push_back(w);
  pieces.push_back(w);
  Word out = concat(pieces);
  require_verified(out, h, 1, "edge-set removal word");
  return out;
}

Word remove_matching(const Graph& h, std::span<const Edge> matching, const Word& w,
                     bool short_form) {
  VertexSet used = h.empty_set();
  std::vector<VertexSet> parts;
  for (auto [u, v] : matching) {
    if (u == v) throw InputError("matching edge is a loop");
    if (used[u] || used[v]) throw InputError("matching edges share a vertex");
    if (h.adjacent(u, v)) {
      throw InputError("matching edge " + h.label(u) + "-" + h.label(v) + " is already an edge");
    }
    used.set(u);
    used.set(v);
    VertexSet part = h.empty_set();
    part.set(u);
    part.set(v);
    parts.push_back(std::move(part));
  }
  const Graph g = with_edges(h, matching);
  return remove_edge_sets(g, w, parts, short_form);
}

SplitPartition::SplitPartition(Graph g, std::vector<VertexId> clique,
                               std::vector<VertexId> independent)
    : graph_(std::move(g)), clique_(std::move(clique)), independent_(std::move(independent)) {
  VertexSet a = graph_.empty_set(), b = graph_.empty_set();
  for (VertexId v : clique_) {
    if (v < 0 || v >= graph_.order() || a[v]) throw InputError("invalid clique vertex list");
    a.set(v);
  }
  for (VertexId v : independent_) {
    if (v < 0 || v >= graph_.order() || b[v]) throw InputError("invalid independent vertex list");
    b.set(v);
  }
  if (a.intersects(b)) throw InputError("clique and independent set overlap");
  if ((a | b).count() != static_cast<std::size_t>(graph_.order())) {
    throw InputError("clique and independent set do not cover the graph");
  }
  if (!is_clique(graph_, a)) throw InputError("clique part is not a clique");
  if (!is_independent(graph_, b)) throw InputError("independent part is not independent");
}

SplitPartition SplitPartition::with_clique(Graph g, std::vector<VertexId> clique) {
  VertexSet a = g.empty_set();
  for (VertexId v : clique) {
    if (v < 0 || v >= g.order()) throw InputError("invalid clique vertex");
    a.set(v);
  }
  auto rest = members(~a);
  return SplitPartition(std::move(g), std::move(clique), std::move(rest));
}

std::vector<VertexId> SplitPartition::neighbors(std::size_t i) const {
  std::vector<VertexId> out;
  for (VertexId b : independent_)
    if (graph_.adjacent(clique_.at(i), b)) out.push_back(b);
  return out;
}

std::vector<VertexId> SplitPartition::non_neighbors(std::size_t i) const {
  std::vector<VertexId> out;
  for (VertexId b : independent_)
    if (!graph_.adjacent(clique_.at(i), b)) out.push_back(b);
  return out;
}

std::vector<Permutation> split_blocks(const SplitPartition& p) {
  return split_construction(p.graph(), p.clique(), p.independent(), true);
}

Word split_word(const SplitPartition& p) {
  const auto blocks = split_blocks(p);
  Word w = join(blocks);
  require_verified(w, p.graph(), 1, "split word");
  return w;
}

std::vector<Permutation> comparability_perm_rep(const Orientation& d) {
  if (!is_transitive(d)) throw InputError("orientation is not transitive");
  const Graph& g = d.base();
  const int n = g.order();
  const AlphabetPtr& alphabet = g.alphabet();

  // Linear extension of d plus one extra arc (or none), smallest index first.
  auto extension = [&](std::optional<Arc> extra) {
    std::vector<int> indegree(n);
    for (VertexId v = 0; v < n; ++v) indegree[v] = static_cast<int>(d.in(v).count());
    if (extra) ++indegree[extra->second];
    std::vector<VertexId> order;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
      VertexId pick = -1;
      for (VertexId v = 0; v < n && pick < 0; ++v)
        if (!done[v] && indegree[v] == 0) pick = v;
      if (pick < 0) throw VerificationError("no linear extension (orientation not acyclic)");
      done[pick] = true;
      order.push_back(pick);
      for (VertexId w : members(d.out(pick))) --indegree[w];
      if (extra && extra->first == pick) --indegree[extra->second];
    }
    return make_perm(alphabet, std::move(order));
  };

  std::vector<Permutation> perms{extension(std::nullopt)};
  const auto non_edges = g.non_edges();
  auto seen_both = [&](VertexId x, VertexId y) {
    bool xy = false, yx = false;
    for (const auto& p : perms) (p.before(x, y) ? xy : yx) = true;
    return xy && yx;
  };
  for (auto [x, y] : non_edges) {
    if (seen_both(x, y)) continue;
    // Incomparable in a transitive orientation, so the reversed pair can be
    // added without creating a cycle.
    const bool x_first = perms.front().before(x, y);
    perms.push_back(extension(x_first ? Arc{y, x} : Arc{x, y}));
  }

  const Word w = join(perms);
  require_verified(w, g, 0, "comparability permutations");
  return perms;
}

CompIndPartition::CompIndPartition(Graph g, VertexSet comparability_part, Orientation orientation)
    : graph_(std::move(g)), part_a_(std::move(comparability_part)), orientation_(std::move(orientation)) {
  if (part_a_.size() != static_cast<std::size_t>(graph_.order())) {
    throw InputError("vertex set size does not match graph order");
  }
  if (!(orientation_.base() == induced_subgraph(graph_, part_a_))) {
    throw InputError("orientation is not an orientation of G[A]");
  }
  if (!is_transitive(orientation_)) throw InputError("orientation of G[A] is not transitive");
  if (!is_independent(graph_, ~part_a_)) throw InputError("B is not an independent set");
  perms_ = comparability_perm_rep(orientation_);
}

CompIndPartition CompIndPartition::with_independent_set(Graph g, VertexSet independent) {
  if (independent.size() != static_cast<std::size_t>(g.order())) {
    throw InputError("vertex set size does not match graph order");
  }
  VertexSet a = ~independent;
  auto found = search_transitive(induced_subgraph(g, a));
  if (!found.found()) throw InputError("G[A] is not a comparability graph");
  return CompIndPartition(std::move(g), std::move(a), std::move(*found.value));
}

std::vector<VertexId> CompIndPartition::clique_order() const {
  // a_1 .. a_k is Q_1 read backwards.
  std::vector<VertexId> order;
  const auto& q1 = perms_.front();
  for (std::size_t i = q1.size(); i-- > 0;) order.push_back(graph_.index(q1.alphabet()->label(q1[i])));
  return order;
}

std::vector<VertexId> CompIndPartition::independent() const { return members(~part_a_); }

Word comp_plus_ind_word(const CompIndPartition& p) {
  const Graph& g = p.graph();
  const auto a = p.clique_order();
  const auto b = p.independent();
  auto blocks = split_construction(g, a, b, false);
  for (const auto& q : p.permutations()) {
    std::vector<VertexId> letters;
    for (VertexId v : q.word().letters()) letters.push_back(g.index(q.alphabet()->label(v)));
    append(letters, b);
    blocks.push_back(make_perm(g.alphabet(), std::move(letters)));
  }
  Word w = join(blocks);
  require_verified(w, g, 1, "comparability plus independent set word");
  return w;
}

Graph mycielski(const Graph& g, std::string_view shadow_prefix, std::string_view apex) {
  const int n = g.order();
  std::vector<std::string> labels = g.alphabet()->labels();
  for (int i = 1; i <= n; ++i) labels.push_back(std::string(shadow_prefix) + std::to_string(i));
  labels.emplace_back(apex);
  auto edges = g.edges();
  const VertexId x = 2 * n;
  for (VertexId i = 0; i < n; ++i) {
    const VertexId u = n + i;
    edges.emplace_back(u, x);
    for (VertexId y : members(g.neighbors(i))) edges.emplace_back(y, u);
  }
  return Graph(make_alphabet(std::move(labels)), edges);
}

Word mycielski_cycle_word(int n) {
  if (n < 3) throw InputError("mycielski cycle word needs n >= 3");
  const Graph mu = mycielski(cycle_graph(n, "v"));
  VertexSet keep = mu.all_vertices();
  keep.reset(2 * n);
  const Graph target = induced_subgraph(mu, keep);

  auto v = [n](int i) { return ((i - 1) % n + n) % n; };      // v_i, 1-based, cyclic
  auto u = [n](int i) { return n + ((i - 1) % n + n) % n; };  // u_i
  std::vector<VertexId> letters;
  letters.reserve(4 * n);
  for (int i = 1; i <= n; ++i) {
    letters.push_back(v(i + 1));
    letters.push_back(u(i));
    letters.push_back(u(i + 1));
    letters.push_back(v(i));
  }
  Word w(target.alphabet(), std::move(letters));
  require_verified(w, target, 0, "mycielski cycle word");
  return w;
}

}  // namespace wordrep
