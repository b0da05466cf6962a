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

#ifndef WORDREP_TESTS_ORACLES_HPP_
#define WORDREP_TESTS_ORACLES_HPP_

// Naive reference implementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/word.hpp"

namespace oracle {

using wordrep::Arc;
using wordrep::Edge;
using wordrep::Graph;
using wordrep::Orientation;
using wordrep::VertexId;
using wordrep::Word;

// Copies x and y in order, then counts equal neighbours.
inline int count_11(const std::vector<int>& letters, int x, int y) {
  std::vector<int> sub;
  for (int c : letters)
    if (c == x || c == y) sub.push_back(c);
  int count = 0;
  for (std::size_t i = 1; i < sub.size(); ++i)
    if (sub[i] == sub[i - 1]) ++count;
  return count;
}

inline std::vector<int> letters(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

inline bool alternate(const std::vector<int>& letters, int x, int y) {
  int prev = -1;
  for (int c : letters) {
    if (c != x && c != y) continue;
    if (c == prev) return false;
    prev = c;
  }
  return true;
}

// Edge set of the graph a word represents, as sorted index pairs.
inline std::set<Edge> edges_of_word(const std::vector<int>& letters, int n, int k) {
  std::set<Edge> out;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (count_11(letters, x, y) <= k) out.insert({x, y});
  return out;
}

inline std::set<Edge> edge_set(const Graph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

// All directed simple paths of d, by brute-force extension.
inline void for_each_path(const Orientation& d, const std::function<void(const std::vector<VertexId>&)>& f) {
  const int n = d.order();
  std::vector<VertexId> path;
  std::function<void()> grow = [&] {
    f(path);
    const VertexId tail = path.back();
    for (VertexId v = 0; v < n; ++v) {
      if (!d.has_arc(tail, v) || std::find(path.begin(), path.end(), v) != path.end()) continue;
      path.push_back(v);
      grow();
      path.pop_back();
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    path = {s};
    grow();
  }
}

// Path definition of a shortcut: a directed path v0 -> ... -> vk whose ends
// are joined by the arc v0 -> vk while some pair on the path is not adjacent.
inline bool has_shortcut_by_paths(const Orientation& d) {
  bool found = false;
  for_each_path(d, [&](const std::vector<VertexId>& p) {
    if (found || p.size() < 4 || !d.has_arc(p.front(), p.back())) return;
    for (std::size_t i = 0; i < p.size() && !found; ++i)
      for (std::size_t j = i + 1; j < p.size() && !found; ++j)
        if (!d.base().adjacent(p[i], p[j])) found = true;
  });
  return found;
}

inline bool has_cycle_naive(const Orientation& d) {
  const int n = d.order();
  // Floyd-Warshall style closure.
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (auto [u, v] : d.arcs()) r[u][v] = true;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][m] && r[m][j]) r[i][j] = true;
  for (int i = 0; i < n; ++i)
    if (r[i][i]) return true;
  return false;
}

inline bool transitive_naive(const Orientation& d) {
  const int n = d.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (d.has_arc(a, b) && d.has_arc(b, c) && !d.has_arc(a, c)) return false;
  return true;
}

// Calls f on each of the 2^m orientations of g.
inline void for_each_orientation(const Graph& g, const std::function<void(const Orientation&)>& f) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<Arc> arcs(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t i = 0; i < m; ++i) {
      arcs[i] = (mask >> i & 1) ? Arc{edges[i].second, edges[i].first} : Arc{edges[i].first, edges[i].second};
    }
    f(Orientation(g, arcs));
  }
}

inline bool any_semi_transitive_naive(const Graph& g) {
  bool found = false;
  for_each_orientation(g, [&](const Orientation& d) {
    if (!found && !has_cycle_naive(d) && !has_shortcut_by_paths(d)) found = true;
  });
  return found;
}

inline bool any_transitive_naive(const Graph& g) {
  bool found = false;
  for_each_orientation(g, [&](const Orientation& d) {
    if (!found && transitive_naive(d)) found = true;
  });
  return found;
}

// Smallest column-order upper-triangle code over all n! relabelings.
inline std::uint64_t brute_canonical_code(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) code = code << 1 | (g.adjacent(p[i], p[j]) ? 1 : 0);
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// All labeled graphs on n vertices, as edge masks over the pair list.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) edges.emplace_back(u, v);
  return Graph(wordrep::numbered_alphabet(n), edges);
}

// Circle graph of a double-occurrence word: chords cross iff their
// intervals overlap without nesting.
inline std::set<Edge> circle_graph_edges(const std::vector<int>& letters, int n) {
  std::vector<int> first(n, -1), second(n, -1);
  for (int i = 0; i < static_cast<int>(letters.size()); ++i) {
    int c = letters[i];
    (first[c] < 0 ? first[c] : second[c]) = i;
  }
  std::set<Edge> out;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const bool cross = (first[x] < first[y] && first[y] < second[x] && second[x] < second[y]) ||
                         (first[y] < first[x] && first[x] < second[y] && second[y] < second[x]);
      if (cross) out.insert({x, y});
    }
  }
  return out;
}

inline Word random_word(std::mt19937& rng, const wordrep::AlphabetPtr& a, int length) {
  std::uniform_int_distribution<int> letter(0, a->size() - 1);
  std::vector<VertexId> w(length);
  for (auto& c : w) c = letter(rng);
  return Word(a, std::move(w));
}

inline wordrep::Permutation random_permutation(std::mt19937& rng, const wordrep::AlphabetPtr& a) {
  std::vector<VertexId> p(a->size());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return wordrep::Permutation(Word(a, std::move(p)));
}

inline Graph random_graph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  return Graph(wordrep::numbered_alphabet(n), edges);
}

}  // namespace oracle

#endif  // WORDREP_TESTS_ORACLES_HPP_
